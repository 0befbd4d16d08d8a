#include <random>

#include "doctest.h"
#include "entangle/symbolic/identities.hpp"
#include "entangle/witness/witness.hpp"

using namespace entangle;
using namespace entangle::symbolic;

namespace {

Assignment random_point(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-49, 49);
  Assignment x;
  for (auto& r : x) r = Rat(num(rng), 50);
  return x;
}

witness::Params part(const Assignment& x, std::size_t off) { return {x[off], x[off + 1], x[off + 2], x[off + 3]}; }

}  // namespace

TEST_CASE("multilinear arithmetic") {
  const MultiPoly a = MultiPoly::alpha(1), b = MultiPoly::beta(1);
  const MultiPoly p = (a + 1) * (b + 1);
  CHECK(p.size() == 4);
  CHECK(p.coefficient(0) == Rat(1));
  Assignment x{};
  x[0] = Rat(-1, 2);
  x[4] = Rat(-2, 3);
  CHECK(p.eval(x) == Rat(1, 6));
  CHECK_THROWS_AS(a * a, MultilinearityViolation);
  CHECK_THROWS_AS((a + b) * (a - b), MultilinearityViolation);
  CHECK((p - p).is_zero());
  CHECK((a * Rat(0)).is_zero());
  CHECK(p.str() == "1 + a1 + b1 + a1*b1");
}

TEST_CASE("symbolic omega agrees with the numeric one") {
  const PolyMat om = symbolic_omega();
  Assignment zero{};
  CHECK(om[2][2].eval(zero) == Rat(8));
  CHECK(om[0][0].coefficient(0) == Rat(4));
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    const Assignment x = random_point(rng);
    const exact::Mat num = witness::omega(part(x, 0), part(x, 4));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(om[i][j].eval(x) == num(i, j));
    CHECK(symbolic_R(Side::Alpha).eval(x) == witness::R(part(x, 0)));
    CHECK(symbolic_R(Side::Beta).eval(x) == witness::R(part(x, 4)));
  }
}

TEST_CASE("the identity holds exactly") {
  const auto rep = check_magical_identity();
  CHECK(rep.holds);
  CHECK(rep.same_support);
  CHECK(rep.f_terms == rep.rr_terms);
  CHECK(rep.f_terms > 0);
  CHECK(rep.residual == "0");
}

TEST_CASE("mutated omega breaks it") {
  const auto rep = check_magical_identity({1, -1, -1, 1});
  CHECK_FALSE(rep.holds);
  CHECK(rep.residual != "0");
  CHECK_FALSE(check_magical_identity({1, 1, 1, 1}).holds);
}

TEST_CASE("weight factorizations") {
  CHECK(check_weight_positivity().all());
  CHECK(check_balance());
  const auto& fs = weight_factorizations();
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(fs[i].index == i + 1);
    for (const auto& s : fs[i].summands)
      for (const auto& u : s) {
        CHECK((u.sign == 1 || u.sign == -1));
        CHECK(u.var >= 1);
        CHECK(u.var <= 4);
      }
    CHECK_FALSE(factorization_str(fs[i]).empty());
  }
  // value check: c1 at gamma = 0 is 2
  Assignment zero{};
  CHECK(symbolic_weights(Side::Alpha)[0].eval(zero) == Rat(2));
}
