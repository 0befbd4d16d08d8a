#include "doctest.h"
#include "entangle/cones/json_io.hpp"
#include "entangle/sandwich/sandwich.hpp"

using namespace entangle;
using namespace entangle::sandwich;

namespace {

Vec v(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return Vec(out);
}

Cone corpus(const std::string& name) {
  return cones::load_cone(std::string(ENTANGLE_CORPUS_DIR) + "/" + name + ".json");
}

Cone square() { return Cone("square", 3, {v({-1, -1, 1}), v({1, -1, 1}), v({1, 1, 1}), v({-1, 1, 1})}); }

}  // namespace

TEST_CASE("blunt square") {
  CHECK(blunt_square_contains(v({0, 0, 0})));
  CHECK(blunt_square_contains(v({0, 0, 1})));
  CHECK(blunt_square_contains(v({1, 0, 1})));
  CHECK(blunt_square_contains(Vec{Rat(1), Rat(99, 100), Rat(1)}));
  CHECK_FALSE(blunt_square_contains(v({1, 1, 1})));
  CHECK_FALSE(blunt_square_contains(v({-2, 2, 2})));
  CHECK_FALSE(blunt_square_contains(v({2, 0, 1})));
  CHECK_FALSE(blunt_square_contains(v({0, 0, -1})));
  CHECK_THROWS_AS(blunt_square_contains(v({0, 1})), DimensionMismatch);
}

TEST_CASE("kites") {
  CHECK_THROWS_AS(Kite::make({Rat(1), Rat(0), Rat(0), Rat(0)}), InvalidInput);
  CHECK_THROWS_AS(Kite::make({Rat(0), Rat(0), Rat(-1), Rat(0)}), InvalidInput);
  const Kite k = Kite::make({Rat(1, 2), Rat(0), Rat(0), Rat(0)});
  const Cone c = kite_cone(k);
  CHECK(c.extreme_rays().size() == 4);
  for (const auto& t : k.rays()) CHECK(blunt_square_contains(t));
}

TEST_CASE("classical cones are refused") {
  for (const char* name : {"rplus2", "rplus3", "rplus5", "random_classical_d4"}) {
    CAPTURE(name);
    CHECK_THROWS_AS(construct_sandwich(corpus(name)), ClassicalConeError);
  }
}

TEST_CASE("square gives the zero kite") {
  const auto con = construct_sandwich(square());
  for (const auto& a : con.sandwich.kite.alpha) CHECK(a.is_zero());
  CHECK(verify_sandwich(square(), con.sandwich).ok());
  CHECK(con.trace.d == 0);
}

TEST_CASE("square pyramid uses an edge") {
  const auto con = construct_sandwich(corpus("pyramid"));
  CHECK(con.trace.d == 1);
  CHECK(con.trace.face.vertex_indices.size() == 2);
  CHECK(con.trace.pyramid_claim);
}

TEST_CASE("trace invariants on the corpus") {
  const auto manifest = cones::read_json_file(std::string(ENTANGLE_CORPUS_DIR) + "/manifest.json");
  for (const auto& e : manifest["cones"]) {
    if (e["classical"].get<bool>()) continue;
    const Cone c = cones::load_cone(std::string(ENTANGLE_CORPUS_DIR) + "/" + e["file"].get<std::string>());
    CAPTURE(c.name());
    Construction con;
    REQUIRE_NOTHROW(con = construct_sandwich(c));
    const auto& s = con.sandwich;
    const auto& t = con.trace;
    const auto rep = verify_sandwich(c, s);
    CHECK(rep.ok());
    CHECK(s.squash * s.embed == Mat::identity(3));
    for (const auto& a : s.kite.alpha) CHECK(a.abs() < Rat(1));
    CHECK(dot(t.f, t.v1) == Rat(1));
    CHECK(dot(t.f, t.v2).is_zero());
    CHECK(t.mu.sign() > 0);
    CHECK(t.mu < Rat(1));
    CHECK(t.lambda.sign() > 0);
    CHECK(t.lambda < Rat(1));
    CHECK(dot(t.ell, t.x2) == t.mu);
    CHECK(t.pyramid_claim);
    CHECK(t.face.vertex_indices.size() >= t.d + 1);
    CHECK(t.v_basis.size() == t.d + 1);
    CHECK(t.v_basis.size() + t.w_basis.size() == c.dim() - 1);
    for (const auto& x : t.vertices) {
      CHECK(dot(t.f, x).sign() >= 0);
      CHECK(dot(t.f, x) <= Rat(1));
    }
  }
}

TEST_CASE("verification catches broken maps") {
  const Cone c = corpus("kite_mixed");
  const auto con = construct_sandwich(c);
  SUBCASE("identity squash is not enough") {
    // the identity maps satisfy squash*embed = I but the kite corner escapes the blunt square
    const Cone sq = square();
    const Sandwich naive{Kite::make({Rat(0), Rat(0), Rat(0), Rat(0)}), Mat::identity(3), Mat::identity(3)};
    const auto rep = verify_sandwich(sq, naive);
    CHECK(rep.identity);
    CHECK(rep.embed_in_cone);
    CHECK_FALSE(rep.squash_blunt);
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("perturbed embed") {
    Sandwich bad = con.sandwich;
    bad.embed(0, 0) += Rat(1000);
    const auto rep = verify_sandwich(c, bad);
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("wrong shape") {
    Sandwich bad = con.sandwich;
    bad.embed = Mat::identity(4);
    CHECK_THROWS_AS(verify_sandwich(c, bad), DimensionMismatch);
  }
}

TEST_CASE("json roundtrip") {
  const Cone c = corpus("pentagon");
  const auto con = construct_sandwich(c);
  const Sandwich back = sandwich_from_json(sandwich_to_json(con.sandwich));
  CHECK(back.kite.alpha == con.sandwich.kite.alpha);
  CHECK(back.embed == con.sandwich.embed);
  CHECK(back.squash == con.sandwich.squash);
  CHECK(trace_to_json(con.trace).contains("ell"));
  CHECK_THROWS_AS(sandwich_from_json(cones::Json::object()), InvalidInput);
}
