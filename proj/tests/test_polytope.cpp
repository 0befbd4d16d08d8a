#include <algorithm>
#include <random>

#include "doctest.h"
#include "entangle/exact/linalg.hpp"
#include "entangle/polytope/antipodal.hpp"
#include "entangle/polytope/delta.hpp"
#include "entangle/polytope/projective.hpp"

using namespace entangle;
using namespace entangle::polytope;

namespace {

Vec v2(long x, long y) { return Vec{Rat(x), Rat(y)}; }
Vec v3(long x, long y, long z) { return Vec{Rat(x), Rat(y), Rat(z)}; }

Polytope square() { return Polytope::from_points({v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)}); }

Polytope square_pyramid() {
  return Polytope::from_points({v3(-1, -1, 0), v3(1, -1, 0), v3(1, 1, 0), v3(-1, 1, 0), v3(0, 0, 1)});
}

Polytope standard_simplex(std::size_t n) {
  std::vector<Vec> pts{Vec(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Vec::unit(n, i));
  return Polytope::from_points(pts);
}

Polytope cube() {
  std::vector<Vec> pts;
  for (int m = 0; m < 8; ++m) pts.push_back(v3(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1));
  return Polytope::from_points(pts);
}

Polytope random_polytope(std::mt19937& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<long> c(-6, 6);
  for (;;) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Vec p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = Rat(c(rng), 1 + (c(rng) + 6) % 3);
      pts.push_back(p);
    }
    if (exact::affine_rank(pts) == n) return Polytope::from_points(pts);
  }
}

bool has_facet(const Polytope& k, const Vec& normal, const Rat& offset) {
  return std::any_of(k.facets().begin(), k.facets().end(),
                     [&](const Facet& f) { return f.normal == normal && f.offset == offset; });
}

// Sampling oracle: no (vertex, face) pair with face dimension < d has a
// sampled point v ∈ F with the midpoint of [u, v] interior.
bool no_smaller_pair_by_sampling(const Polytope& k, std::size_t d, std::mt19937& rng) {
  std::uniform_int_distribution<long> w(1, 20);
  for (const auto& face : all_faces(k)) {
    if (face.dim >= d) continue;
    const auto pts = face.points(k);
    for (int s = 0; s < 30; ++s) {
      Vec v(k.dim());
      Rat total(0);
      for (const auto& p : pts) {
        const Rat c(w(rng));
        v += p * c;
        total += c;
      }
      v /= total;
      for (const auto& u : k.vertices()) {
        if (k.strictly_contains((u + v) / Rat(2))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("double description examples") {
  const Polytope sq = square();
  CHECK(sq.facets().size() == 4);
  CHECK(has_facet(sq, v2(1, 0), Rat(1)));
  CHECK(has_facet(sq, v2(-1, 0), Rat(1)));
  CHECK(has_facet(sq, v2(0, 1), Rat(1)));
  CHECK(has_facet(sq, v2(0, -1), Rat(1)));

  const Polytope tri = Polytope::from_inequalities(
      {{v2(-1, 0), Rat(0)}, {v2(0, -1), Rat(0)}, {v2(1, 1), Rat(1)}}, 2);
  CHECK(same_vertex_set(tri, Polytope::from_points({v2(0, 0), v2(1, 0), v2(0, 1)})));

  const Polytope kite = Polytope::from_points({v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)});
  CHECK(kite.facets().size() == 4);
  for (long a : {1, -1})
    for (long b : {1, -1}) CHECK(has_facet(kite, v2(a, b), Rat(1)));
}

TEST_CASE("double description errors and redundancy") {
  CHECK_THROWS_AS(Polytope::from_inequalities({{v2(-1, 0), Rat(0)}, {v2(0, -1), Rat(0)}}, 2),
                  InvalidInput);
  CHECK_THROWS_AS(Polytope::from_inequalities({{v2(1, 0), Rat(-1)}, {v2(-1, 0), Rat(-1)},
                                               {v2(0, 1), Rat(1)}, {v2(0, -1), Rat(1)}},
                                              2),
                  InvalidInput);
  try {
    (void)Polytope::from_points({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)});
    FAIL("expected NotFullDimensional");
  } catch (const NotFullDimensional& e) {
    CHECK(e.hull().dim() == 2);
  }
  const Polytope sq = Polytope::from_points(
      {v2(-1, -1), v2(0, 0), v2(1, -1), v2(1, 1), v2(1, 1), v2(-1, 1), v2(0, 1)});
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.vertices()[0] == v2(-1, -1));
}

TEST_CASE("roundtrip and incidence invariants on random polytopes") {
  std::mt19937 rng(17);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 3;
    const Polytope k = random_polytope(rng, n, n + 3 + t % 5);
    const Polytope h = Polytope::from_inequalities(k.facets(), n);
    CHECK(same_vertex_set(k, h));
    for (std::size_t v = 0; v < k.vertices().size(); ++v) {
      CHECK(k.facets_at(v).size() >= n);
      for (const auto& f : k.facets()) CHECK(f.slack(k.vertices()[v]).sign() >= 0);
    }
    for (const auto& face : all_faces(k)) {
      const auto phi = exposing_functional(k, face.tight_facets);
      for (std::size_t v = 0; v < k.vertices().size(); ++v) {
        CHECK(phi(k.vertices()[v]).sign() >= 0);
        CHECK(phi(k.vertices()[v]).is_zero() == face.has_vertex(v));
      }
      CHECK(exact::affine_rank(face.points(k)) == face.dim);
    }
  }
}

TEST_CASE("faces") {
  const Polytope sq = square();
  CHECK(faces_of_dim(sq, 0).size() == 4);
  CHECK(faces_of_dim(sq, 1).size() == 4);
  CHECK(faces_of_dim(square_pyramid(), 1).size() == 8);
  CHECK(f_vector(square_pyramid()) == std::vector<std::size_t>{5, 8, 5});
  CHECK(f_vector(cube()) == std::vector<std::size_t>{8, 12, 6});
  CHECK_THROWS_AS(faces_of_dim(sq, 2), InvalidInput);
}

TEST_CASE("containment") {
  const Polytope sq = square();
  CHECK(sq.strictly_contains(v2(0, 0)));
  CHECK(sq.contains(v2(1, 0)));
  CHECK_FALSE(sq.strictly_contains(v2(1, 0)));
  CHECK_FALSE(sq.contains(v2(1, 2)));
  CHECK_THROWS_AS((void)sq.contains(v3(0, 0, 0)), DimensionMismatch);
}

TEST_CASE("delta") {
  std::mt19937 rng(99);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(delta(standard_simplex(n)).d == n - 1);

  const auto sq = delta(square());
  CHECK(sq.d == 0);
  CHECK(sq.witness_point == v2(0, 0));
  const Polytope k = square();
  CHECK(k.vertices()[sq.face.vertex_indices[0]] == -k.vertices()[sq.vertex]);

  const auto pyr = delta(square_pyramid());
  CHECK(pyr.d == 1);
  CHECK(no_smaller_pair_by_sampling(square_pyramid(), 1, rng));

  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + t % 3;
    const Polytope k = random_polytope(rng, n, n + 2 + t % 4);
    const auto r = delta(k);
    CHECK(r.face.dim == r.d);
    CHECK(k.strictly_contains(r.witness_point));
    CHECK(r.d <= (k.is_simplex() ? n - 1 : n - 2));
    CHECK(no_smaller_pair_by_sampling(k, r.d, rng));
  }
}

TEST_CASE("antipodal pairs") {
  const Polytope seg = Polytope::from_points({Vec{Rat(-1)}, Vec{Rat(1)}});
  const auto s = antipodal_through(seg, Vec{Rat(0)});
  CHECK(s.x1 == Vec{Rat(-1)});
  CHECK(s.x2 == Vec{Rat(1)});
  CHECK(s.mu == Rat(1, 2));

  const auto q = antipodal_through(square(), v2(0, 0));
  CHECK(verify_antipodal(square(), v2(0, 0), q));
  CHECK(q.mu == dot(q.ell, q.x2));

  const Polytope tri = Polytope::from_points({v2(0, 1), v2(1, -1), v2(-1, -1)});
  const auto t = antipodal_through(tri, v2(0, 0));
  CHECK(verify_antipodal(tri, v2(0, 0), t));
  CHECK(t.mu == dot(t.ell, t.x2));

  CHECK_THROWS_AS(antipodal_through(square(), v2(1, 0)), InvalidInput);

  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Polytope k = random_polytope(rng, 2 + i % 3, 6);
    const Vec z = k.barycenter();
    CHECK(verify_antipodal(k, z, antipodal_through(k, z)));
  }
}

TEST_CASE("projective maps") {
  const Polytope sq = square();
  CHECK(same_vertex_set(apply_projective(ProjectiveMap::identity(2), sq), sq));

  const auto affine = ProjectiveMap::make(Mat{{2, 0}, {0, 1}}, v2(1, 0), Vec(2), Rat(1));
  CHECK(affine.is_affine());
  CHECK(same_vertex_set(apply_projective(affine, sq),
                        Polytope::from_points({v2(-1, -1), v2(3, -1), v2(3, 1), v2(-1, 1)})));

  const auto p = ProjectiveMap::make(Mat::identity(2), Vec(2), v2(1, 0), Rat(2));
  const Polytope img = apply_projective(p, sq);
  CHECK(f_vector(img) == f_vector(sq));
  CHECK(img.vertices()[1] == Vec{Rat(1, 3), Rat(-1, 3)});
  CHECK(img.vertices()[0] == Vec{Rat(-1), Rat(-1)});

  const auto bad = ProjectiveMap::make(Mat::identity(2), Vec(2), v2(1, 0), Rat(1));
  CHECK_THROWS_AS(apply_projective(bad, sq), InvalidInput);
  CHECK_THROWS_AS(ProjectiveMap::make(Mat{{1, 0}, {0, 0}}, Vec(2), Vec(2), Rat(1)), InvalidInput);

  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    const Polytope k = random_polytope(rng, 3, 7);
    const Vec x0 = k.barycenter();
    // denominator 1 + ε·⟨w, x − x0⟩ stays positive for small ε
    Vec w = v3(1, -2, 1) / Rat(100);
    const auto m = ProjectiveMap::make(Mat::identity(3), Vec(3), w, Rat(1) - dot(w, x0));
    CHECK(f_vector(apply_projective(m, k)) == f_vector(k));
  }
}

TEST_CASE("send to infinity") {
  const Polytope sq = square();
  const auto par = send_to_infinity(sq, {v2(1, 0), Rat(-1)}, {v2(-1, 0), Rat(-1)});
  CHECK(par.map.is_affine());
  CHECK(f_vector(par.image) == f_vector(sq));

  // triangle: edge x = 0 and the opposite vertex (1, 0)
  const Polytope tri = Polytope::from_points({v2(0, 0), v2(1, 0), v2(0, 1)});
  const Halfspace h1{v2(1, 0), Rat(0)}, h2{v2(-2, -1), Rat(-2)};
  const auto r = send_to_infinity(tri, h1, h2);
  const Vec x0 = tri.barycenter();
  CHECK(exact::det(r.map.homogeneous()) == dot(h1.f, x0) + dot(h2.f, x0) - h1.t - h2.t);
  // images of H1 ∩ K and H2 ∩ K lie on parallel hyperplanes: after the map,
  // some fixed normal separates them as its min and max over K'.
  const Vec a0 = r.map(v2(0, 0)), a1 = r.map(v2(0, 1)), b = r.map(v2(1, 0));
  const Vec edge = a1 - a0;
  const Vec normal{-edge[1], edge[0]};
  Rat lo = dot(normal, a0), hi = dot(normal, b);
  if (lo > hi) std::swap(lo, hi);
  for (const auto& v : r.image.vertices()) {
    CHECK(dot(normal, v) >= lo);
    CHECK(dot(normal, v) <= hi);
  }

  // two edges of a triangle meet in a vertex
  CHECK_THROWS_AS(send_to_infinity(tri, {v2(1, 0), Rat(0)}, {v2(0, 1), Rat(0)}), InvalidInput);
  CHECK_THROWS_AS(send_to_infinity(tri, {v2(1, 0), Rat(1, 2)}, h2), InvalidInput);
  CHECK_THROWS_AS(send_to_infinity(tri, {v2(1, 0), Rat(-1)}, h2), InvalidInput);
}
