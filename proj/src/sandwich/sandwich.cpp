#include "entangle/sandwich/sandwich.hpp"

#include "entangle/exact/linalg.hpp"
#include "entangle/lp/lp.hpp"
#include "entangle/polytope/antipodal.hpp"
#include "entangle/polytope/delta.hpp"

namespace entangle::sandwich {

using polytope::Polytope;

Kite Kite::make(const std::array<Rat, 4>& alpha) {
  for (const auto& a : alpha) {
    require(a.abs() < Rat(1), "kite parameter " + a.str() + " is not in (-1, 1)");
  }
  return Kite{alpha};
}

std::array<Vec, 4> Kite::rays() const {
  return {Vec{Rat(1), alpha[0], Rat(1)}, Vec{alpha[1], Rat(1), Rat(1)},
          Vec{Rat(-1), alpha[2], Rat(1)}, Vec{alpha[3], Rat(-1), Rat(1)}};
}

bool blunt_square_contains(const Vec& p) {
  if (p.size() != 3) throw DimensionMismatch("blunt square lives in R^3");
  if (p.is_zero()) return true;
  const Rat& t = p[2];
  if (t.sign() <= 0) return false;
  const Rat a = p[0].abs(), b = p[1].abs();
  if (a > t || b > t) return false;
  return !(a == t && b == t);
}

Cone kite_cone(const Kite& k) {
  const auto r = Kite::make(k.alpha).rays();
  return Cone("kite", 3, {r[0], r[1], r[2], r[3]});
}

namespace {

Vec homogenize(const Vec& x) {
  Vec h(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = x[i];
  h[x.size()] = Rat(1);
  return h;
}

Vec dehomogenize(const Vec& h) {
  const std::size_t n = h.size() - 1;
  ensure(h[n].sign() > 0, "sandwich: point left the positive level");
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = h[i] / h[n];
  return x;
}

// Some point of K with π(y) = x, as a convex combination of vertices.
Vec preimage(const std::vector<Vec>& vertices, const Mat& pi, const Vec& x) {
  const std::size_t m = vertices.size();
  lp::LinearProgram prog(m);
  for (std::size_t j = 0; j < m; ++j) prog.add_nonnegative(j);
  std::vector<Vec> images;
  for (const auto& v : vertices) images.push_back(pi * v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = images[j][i];
    prog.add(row, lp::Relation::Equal, x[i]);
  }
  Vec ones(m);
  for (std::size_t j = 0; j < m; ++j) ones[j] = Rat(1);
  prog.add(ones, lp::Relation::Equal, Rat(1));
  auto w = lp::find_feasible(prog);
  ensure(w.has_value(), "sandwich: antipodal point has no preimage in K");
  Vec y(vertices[0].size());
  for (std::size_t j = 0; j < m; ++j) y += vertices[j] * (*w)[j];
  return y;
}

// K ∩ V = conv(F ∪ {v1}), compared as vertex sets in V coordinates.
bool check_pyramid(const Polytope& k, const std::vector<Vec>& v_basis, const Vec& v1,
                   const std::vector<Vec>& face_points) {
  const std::size_t n = k.dim(), dv = v_basis.size();
  const Mat frame = Mat::from_columns(v_basis, n);
  std::vector<polytope::Facet> restricted;
  for (const auto& f : k.facets()) {
    Vec a = frame.transpose() * f.normal;
    if (!a.is_zero()) restricted.push_back({std::move(a), f.offset});
  }
  const Polytope section = Polytope::from_inequalities(restricted, dv);
  std::vector<Vec> apex_and_face{*exact::solve_linear(frame, v1)};
  for (const auto& p : face_points) apex_and_face.push_back(*exact::solve_linear(frame, p));
  return polytope::same_vertex_set(section, Polytope::from_points(apex_and_face));
}

}  // namespace

Construction construct_sandwich(const Cone& c) {
  if (cones::is_classical(c)) {
    throw ClassicalConeError("cone '" + c.name() + "' is classical: no kite-square sandwiching exists");
  }
  const cones::ConeBase cb = cones::base(c);
  const Polytope& k = cb.body;
  const std::size_t n = k.dim();
  SandwichTrace tr;

  const polytope::DeltaResult dr = polytope::delta(k);
  tr.d = dr.d;
  tr.v1_index = dr.vertex;
  tr.face = dr.face;

  // exposing halfspaces f_i(x) ≥ t_i
  const auto e1 = polytope::exposing_functional(k, k.facets_at(dr.vertex));
  const auto e2 = polytope::exposing_functional(k, dr.face.tight_facets);
  const polytope::Halfspace h1{-e1.normal, -e1.offset}, h2{-e2.normal, -e2.offset};
  const Vec& v1_base = k.vertices()[dr.vertex];

  Mat proj = Mat::identity(n + 1);
  Vec g_lin;
  Rat g_off;
  tr.parallel = exact::rank({h1.f, h2.f}, n) == 1;
  if (tr.parallel) {
    const Rat scale = dot(h2.f, v1_base) - h2.t;
    ensure(scale.sign() > 0, "sandwich: apex lies on the face hyperplane");
    g_lin = h2.f / scale;
    g_off = -h2.t / scale;
    tr.projective = polytope::ProjectiveMap::identity(n);
  } else {
    const auto sent = polytope::send_to_infinity(k, h1, h2);
    tr.projective = sent.map;
    proj = sent.map.homogeneous();
    // u2/(u1 + u2) in the image coordinates
    const Vec x0 = k.barycenter();
    const Rat a1 = dot(h1.f, x0) - h1.t, a2 = dot(h2.f, x0) - h2.t;
    g_lin = (h2.f * a1 - h1.f * a2) / (a1 + a2);
    g_off = a2 / (a1 + a2);
  }

  std::vector<Vec> moved;
  for (const auto& v : k.vertices()) moved.push_back(dehomogenize(proj * homogenize(v)));
  std::vector<Vec> face_moved;
  for (auto i : dr.face.vertex_indices) face_moved.push_back(moved[i]);
  tr.translation = polytope::barycenter(face_moved);
  ensure((dot(g_lin, tr.translation) + g_off).is_zero(), "sandwich: f does not vanish on F");

  Mat shift = Mat::identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) shift(i, n) = -tr.translation[i];
  tr.normalize = shift * proj;
  for (const auto& v : moved) tr.vertices.push_back(v - tr.translation);
  tr.f = g_lin;

  const Polytope kn = Polytope::from_points(tr.vertices);
  ensure(kn.vertices().size() == tr.vertices.size(), "sandwich: normalization lost a vertex");
  tr.v1 = tr.vertices[dr.vertex];
  for (std::size_t i = 0; i < tr.vertices.size(); ++i) {
    const Rat fv = dot(tr.f, tr.vertices[i]);
    ensure(fv.sign() >= 0 && fv <= Rat(1), "sandwich: f leaves [0, 1] on K");
    ensure((fv == Rat(1)) == (i == dr.vertex), "sandwich: f = 1 away from v1");
    ensure(fv.is_zero() == dr.face.has_vertex(i), "sandwich: f = 0 away from F");
  }

  std::vector<Vec> face_points;
  for (auto i : dr.face.vertex_indices) face_points.push_back(tr.vertices[i]);
  tr.v_basis = {tr.v1};
  for (auto j : exact::independent_subset(face_points, n)) tr.v_basis.push_back(face_points[j]);
  ensure(tr.v_basis.size() == tr.d + 1, "sandwich: span(F) has the wrong dimension");
  tr.w_basis = exact::complete_basis(tr.v_basis, n);
  const std::size_t kw = tr.w_basis.size();
  ensure(kw >= 1, "sandwich: W is trivial");

  std::vector<Vec> cols = tr.v_basis;
  cols.insert(cols.end(), tr.w_basis.begin(), tr.w_basis.end());
  const Mat frame_inv = exact::inverse(Mat::from_columns(cols, n));
  Mat pi(kw, n);  // W coordinates of the projection along V
  for (std::size_t r = 0; r < kw; ++r) pi.set_row(r, frame_inv.row(tr.d + 1 + r));

  tr.pyramid_claim = check_pyramid(kn, tr.v_basis, tr.v1, face_points);
  ensure(tr.pyramid_claim, "sandwich: K ∩ V is not the pyramid over F");

  std::vector<Vec> projected;
  for (const auto& v : tr.vertices) projected.push_back(pi * v);
  const Polytope l = Polytope::from_points(projected);
  const auto ap = polytope::antipodal_through(l, Vec(kw));
  tr.ell = ap.ell;
  tr.mu = ap.mu;
  tr.x1 = ap.x1;
  tr.x2 = ap.x2;
  ensure(tr.mu == dot(tr.ell, tr.x2), "sandwich: mu differs from ell(x2)");

  tr.y1 = preimage(tr.vertices, pi, tr.x1);
  tr.y2 = preimage(tr.vertices, pi, tr.x2);
  const Rat fy1 = dot(tr.f, tr.y1), fy2 = dot(tr.f, tr.y2);
  ensure(fy1.sign() > 0 && fy1 < Rat(1) && fy2.sign() > 0 && fy2 < Rat(1),
         "sandwich: f(y_i) outside (0, 1)");
  const Rat& mu = tr.mu;
  const Rat nu = Rat(1) - mu;
  tr.lambda = mu * fy1 + nu * fy2;
  ensure(tr.lambda.sign() > 0 && tr.lambda < Rat(1), "sandwich: lambda outside (0, 1)");
  tr.v2 = (tr.y1 * mu + tr.y2 * nu - tr.v1 * tr.lambda) / (Rat(1) - tr.lambda);
  ensure(dot(tr.f, tr.v2).is_zero() && kn.contains(tr.v2), "sandwich: v2 is not in F");

  const Kite kite = Kite::make({Rat(1) - Rat(2) * mu, Rat(1) - Rat(2) * fy2, Rat(1) - Rat(2) * mu,
                                Rat(1) - Rat(2) * fy1});

  // Ψ(x; t) = (t − 2f(x), (1 − 2μ)t + 2ℓ(π(x)); t) in normalized coordinates
  const Vec ell_pi = pi.transpose() * tr.ell;
  Mat psi(3, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    psi(0, i) = Rat(-2) * tr.f[i];
    psi(1, i) = Rat(2) * ell_pi[i];
  }
  psi(0, n) = Rat(1);
  psi(1, n) = Rat(1) - Rat(2) * mu;
  psi(2, n) = Rat(1);

  const Mat to_normal = tr.normalize * cb.section;
  const Mat from_normal = exact::inverse(to_normal);
  Sandwich s{kite, Mat(), psi * to_normal};

  const auto t = kite.rays();
  const std::array<Vec, 4> targets{from_normal * homogenize(tr.v2), from_normal * homogenize(tr.y2),
                                   from_normal * homogenize(tr.v1), from_normal * homogenize(tr.y1)};
  const Mat kite3 = Mat::from_columns({t[0], t[1], t[2]}, 3);
  s.embed = Mat::from_columns({targets[0], targets[1], targets[2]}, c.dim()) * exact::inverse(kite3);
  ensure(s.embed * t[3] == targets[3], "sandwich: embed is inconsistent on the fourth kite ray");

  const SandwichReport rep = verify_sandwich(c, s);
  ensure(rep.ok(), "sandwich: verification failed");
  return {std::move(s), std::move(tr)};
}

SandwichReport verify_sandwich(const Cone& c, const Sandwich& s) {
  SandwichReport r;
  if (s.embed.rows() != c.dim() || s.embed.cols() != 3 || s.squash.rows() != 3 ||
      s.squash.cols() != c.dim()) {
    throw DimensionMismatch("sandwich maps do not match the cone dimension");
  }
  r.identity = s.squash * s.embed == Mat::identity(3);
  if (!r.identity) r.failures.emplace_back("squash*embed != I3");

  r.embed_in_cone = true;
  const auto t = s.kite.rays();
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c.contains(s.embed * t[i])) {
      r.embed_in_cone = false;
      r.failures.push_back("embed(t" + std::to_string(i + 1) + ") is not in the cone");
    }
  }
  r.squash_blunt = true;
  for (std::size_t i = 0; i < c.extreme_rays().size(); ++i) {
    if (!blunt_square_contains(s.squash * c.extreme_rays()[i])) {
      r.squash_blunt = false;
      r.failures.push_back("squash(ray " + std::to_string(i) + ") is not in the blunt square cone");
    }
  }
  return r;
}

Json sandwich_to_json(const Sandwich& s) {
  Json alpha = Json::array();
  for (const auto& a : s.kite.alpha) alpha.push_back(a.str());
  return Json{{"alpha", alpha}, {"embed", cones::to_json(s.embed)}, {"squash", cones::to_json(s.squash)}};
}

Json trace_to_json(const SandwichTrace& t) {
  using cones::to_json;
  return Json{{"d", t.d},
              {"v1_index", t.v1_index},
              {"face_vertices", t.face.vertex_indices},
              {"parallel", t.parallel},
              {"projective", {{"B", to_json(t.projective.linear)},
                              {"z", to_json(t.projective.translation)},
                              {"w", to_json(t.projective.denom_normal)},
                              {"k", to_json(t.projective.denom_offset)}}},
              {"translation", to_json(t.translation)},
              {"f", to_json(t.f)},
              {"V_basis", to_json(t.v_basis)},
              {"W_basis", to_json(t.w_basis)},
              {"ell", to_json(t.ell)},
              {"mu", to_json(t.mu)},
              {"lambda", to_json(t.lambda)},
              {"x1", to_json(t.x1)},
              {"x2", to_json(t.x2)},
              {"y1", to_json(t.y1)},
              {"y2", to_json(t.y2)},
              {"v1", to_json(t.v1)},
              {"v2", to_json(t.v2)},
              {"pyramid_claim", t.pyramid_claim}};
}

Sandwich sandwich_from_json(const Json& j) {
  require(j.is_object() && j.contains("alpha") && j.contains("embed") && j.contains("squash"),
          "sandwich document needs alpha, embed and squash");
  const Vec a = cones::vec_from_json(j["alpha"]);
  require(a.size() == 4, "alpha must have four entries");
  return Sandwich{Kite::make({a[0], a[1], a[2], a[3]}), cones::mat_from_json(j["embed"]),
                  cones::mat_from_json(j["squash"])};
}

}  // namespace entangle::sandwich
