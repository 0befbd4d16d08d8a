#include "entangle/witness/witness.hpp"

namespace entangle::witness {

using sandwich::Kite;

namespace {

void check_range(const Params& g) {
  for (const auto& x : g) require(x.abs() < Rat(1), "kite parameter " + x.str() + " is not in (-1, 1)");
}

std::array<Vec, 4> weighted_rays(const Params& g) {
  const auto t = Kite::make(g).rays();
  const auto w = kite_weights(g);
  return {t[0] * w.c[0], t[1] * w.c[1], t[2] * w.c[2], t[3] * w.c[3]};
}

Params params_of(const Sandwich& s) { return s.kite.alpha; }

Mat sigma() { return Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}; }

}  // namespace

KiteWeights kite_weights(const Params& g) {
  check_range(g);
  const Rat two(2);
  return {{two + g[1] + g[3] + g[2] * (g[1] - g[3]), two + g[0] + g[2] + g[3] * (g[0] - g[2]),
           two - g[3] - g[1] + g[0] * (g[3] - g[1]), two - g[2] - g[0] + g[1] * (g[2] - g[0])}};
}

Mat omega(const Params& alpha, const Params& beta) {
  const auto t = weighted_rays(alpha);
  const auto u = weighted_rays(beta);
  return Mat::outer(t[0], u[1]) - Mat::outer(t[1], u[1]) + Mat::outer(t[1], u[0]) + Mat::outer(t[2], u[2]);
}

Rat f_functional(const Mat& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionMismatch("f acts on 3x3 matrices");
  return m(0, 0) + m(0, 1) + m(1, 0) - m(1, 1) - Rat(2) * m(2, 2);
}

Mat f_matrix() { return Mat{{1, 1, 0}, {1, -1, 0}, {0, 0, -2}}; }

Rat R(const Params& g) { return (g[0] * g[1] - Rat(1)) * (g[2] - g[3]) - (g[2] * g[3] - Rat(1)) * (g[0] - g[1]); }

ChshValue chsh_check(const Vec& p, const Vec& q) {
  if (p.size() != 2 || q.size() != 2) throw DimensionMismatch("CHSH points live in R^2");
  require(sandwich::blunt_square_contains(Vec{p[0], p[1], Rat(1)}), "first point is outside the blunt square");
  require(sandwich::blunt_square_contains(Vec{q[0], q[1], Rat(1)}), "second point is outside the blunt square");
  Rat v = p[0] * q[0] + p[0] * q[1] + p[1] * q[0] - p[1] * q[1];
  const bool strict = v < Rat(2);
  return {std::move(v), strict};
}

Params sigma_params(const Params& a) { return {a[1], a[0], a[3], a[2]}; }

Sandwich sigma_fix(const Sandwich& s) {
  return Sandwich{Kite::make(sigma_params(s.kite.alpha)), s.embed * sigma(), sigma() * s.squash};
}

std::string CertificateChecks::first_failure() const {
  if (!a.pass) return "a: " + a.detail;
  if (!b.pass) return "b: " + b.detail;
  if (!c.pass) return "c: " + c.detail;
  if (!d.pass) return "d: " + d.detail;
  return "";
}

WitnessCertificate build_witness(const Cone& c1, const Sandwich& s1, const Cone& c2, const Sandwich& s2) {
  auto require_valid = [](const Cone& c, const Sandwich& s) {
    const auto rep = sandwich::verify_sandwich(c, s);
    require(rep.ok(), "sandwich for '" + c.name() + "' fails verification: " +
                          (rep.failures.empty() ? std::string() : rep.failures.front()));
  };
  require_valid(c1, s1);
  require_valid(c2, s2);
  const Params beta = params_of(s2);
  Sandwich first = s1;
  bool fixed = false;
  if ((-R(params_of(s1)) * R(beta)).sign() < 0) {
    first = sigma_fix(s1);
    fixed = true;
  }
  const Params alpha = params_of(first);
  Mat om = omega(alpha, beta);
  Mat w = first.embed * om * s2.embed.transpose();
  Mat g = first.squash.transpose() * f_matrix() * s2.squash;
  WitnessCertificate cert{c1, c2, first, s2, fixed, alpha, beta, std::move(om), std::move(w), std::move(g), {}};
  cert.checks = verify_certificate(cert);
  return cert;
}

CertificateChecks verify_certificate(const WitnessCertificate& cert) {
  CertificateChecks out;
  const Cone& c1 = cert.c1;
  const Cone& c2 = cert.c2;
  const bool shapes = cert.w.rows() == c1.dim() && cert.w.cols() == c2.dim() && cert.g.rows() == c1.dim() &&
                      cert.g.cols() == c2.dim();
  if (!shapes) {
    out.a.detail = out.b.detail = out.c.detail = out.d.detail = "W or G has the wrong shape";
    return out;
  }

  // (a)
  std::optional<Rat> min_a;
  for (const auto& phi : c1.dual_rays()) {
    const Vec row = cert.w.transpose() * phi;
    for (const auto& psi : c2.dual_rays()) {
      const Rat v = dot(row, psi);
      if (!min_a || v < *min_a) min_a = v;
    }
  }
  out.a.pass = min_a && min_a->sign() >= 0;
  out.a.detail = "min over dual-ray pairs = " + (min_a ? min_a->str() : std::string("none"));

  // (b)
  std::optional<Rat> max_b;
  for (const auto& r : c1.extreme_rays()) {
    const Vec row = cert.g.transpose() * r;
    for (const auto& s : c2.extreme_rays()) {
      const Rat v = dot(row, s);
      if (!max_b || v > *max_b) max_b = v;
    }
  }
  out.b.pass = max_b && max_b->sign() < 0;
  out.b.detail = "max over extreme-ray pairs = " + (max_b ? max_b->str() : std::string("none"));

  // (c)
  const Rat gw = exact::frobenius(cert.g, cert.w);
  bool params_ok = true;
  Rat expected(0);
  try {
    expected = -R(cert.alpha) * R(cert.beta);
  } catch (const InvalidInput&) {
    params_ok = false;
  }
  out.c.pass = params_ok && gw.sign() >= 0 && gw == expected;
  out.c.detail = "g(W) = " + gw.str() + ", -R(alpha)R(beta) = " + expected.str();

  // (d)
  std::vector<std::string> problems;
  if (cert.omega.rows() != 3 || cert.omega.cols() != 3) {
    problems.emplace_back("omega is not 3x3");
  } else {
    if (cert.omega(2, 2).sign() <= 0) problems.push_back("omega33 = " + cert.omega(2, 2).str() + " is not positive");
    if (params_ok && cert.omega != omega(cert.alpha, cert.beta)) problems.emplace_back("omega differs from omega(alpha, beta)");
    if (params_ok && f_functional(cert.omega) != expected) problems.emplace_back("f(omega) != -R(alpha)R(beta)");
  }
  const bool maps_shaped = cert.s1.embed.rows() == c1.dim() && cert.s1.embed.cols() == 3 &&
                           cert.s1.squash.rows() == 3 && cert.s1.squash.cols() == c1.dim() &&
                           cert.s2.embed.rows() == c2.dim() && cert.s2.embed.cols() == 3 &&
                           cert.s2.squash.rows() == 3 && cert.s2.squash.cols() == c2.dim();
  if (!maps_shaped) {
    problems.emplace_back("sandwich maps have the wrong shape");
  } else {
    if (cert.s1.squash * cert.s1.embed != Mat::identity(3) || cert.s2.squash * cert.s2.embed != Mat::identity(3)) {
      problems.emplace_back("squash*embed != I3");
    }
    if (cert.s1.kite.alpha != cert.alpha || cert.s2.kite.alpha != cert.beta) {
      problems.emplace_back("kite parameters differ from the sandwiches");
    }
    if (cert.omega.rows() == 3 && cert.omega.cols() == 3 &&
        cert.w != cert.s1.embed * cert.omega * cert.s2.embed.transpose()) {
      problems.emplace_back("W != embed1 * omega * embed2^T");
    }
    if (cert.g != cert.s1.squash.transpose() * f_matrix() * cert.s2.squash) {
      problems.emplace_back("G != squash1^T F squash2");
    }
  }
  if (cert.w.is_zero()) problems.emplace_back("W is zero");
  out.d.pass = problems.empty();
  out.d.detail = problems.empty() ? "omega33 = " + (cert.omega.rows() == 3 ? cert.omega(2, 2).str() : "?") +
                                        ", embeds left-invertible"
                                  : problems.front();
  return out;
}

LpCrossCheck lp_cross_check(const Cone& c1, const Cone& c2, const Mat& w) {
  LpCrossCheck out;
  const auto res = cones::min_tensor_contains(c1, c2, w);
  out.infeasible = res.status == lp::LpStatus::Infeasible;
  if (!out.infeasible) return out;
  Mat y = cones::separating_matrix(res, c1.dim(), c2.dim());
  bool ok = exact::frobenius(y, w).sign() < 0;
  for (const auto& r : c1.extreme_rays())
    for (const auto& s : c2.extreme_rays()) ok = ok && exact::bilinear(r, y, s).sign() >= 0;
  out.farkas_valid = ok;
  out.separating = std::move(y);
  return out;
}

namespace {

Json check_json(const CheckResult& c) { return Json{{"pass", c.pass}, {"detail", c.detail}}; }

Json params_json(const Params& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(x.str());
  return a;
}

Params params_from_json(const Json& j) {
  const Vec v = cones::vec_from_json(j);
  require(v.size() == 4, "kite parameters need four entries");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

Json certificate_to_json(const WitnessCertificate& cert) {
  using cones::to_json;
  return Json{{"cones", Json::array({cones::cone_to_json(cert.c1), cones::cone_to_json(cert.c2)})},
              {"sandwiches", Json::array({sandwich::sandwich_to_json(cert.s1), sandwich::sandwich_to_json(cert.s2)})},
              {"sigma_fixed", cert.sigma_fixed},
              {"alpha", params_json(cert.alpha)},
              {"beta", params_json(cert.beta)},
              {"omega", to_json(cert.omega)},
              {"W", to_json(cert.w)},
              {"G", to_json(cert.g)},
              {"checks", Json{{"a", check_json(cert.checks.a)},
                              {"b", check_json(cert.checks.b)},
                              {"c", check_json(cert.checks.c)},
                              {"d", check_json(cert.checks.d)}}}};
}

WitnessCertificate certificate_from_json(const Json& j) {
  require(j.is_object(), "certificate must be a JSON object");
  for (const char* key : {"cones", "sandwiches", "alpha", "beta", "omega", "W", "G"}) {
    require(j.contains(key), std::string("certificate is missing '") + key + "'");
  }
  require(j["cones"].size() == 2 && j["sandwiches"].size() == 2, "certificate needs two cones and two sandwiches");
  WitnessCertificate cert{cones::cone_from_json(j["cones"][0]),
                          cones::cone_from_json(j["cones"][1]),
                          sandwich::sandwich_from_json(j["sandwiches"][0]),
                          sandwich::sandwich_from_json(j["sandwiches"][1]),
                          j.value("sigma_fixed", false),
                          params_from_json(j["alpha"]),
                          params_from_json(j["beta"]),
                          cones::mat_from_json(j["omega"]),
                          cones::mat_from_json(j["W"]),
                          cones::mat_from_json(j["G"]),
                          {}};
  return cert;
}

}  // namespace entangle::witness
