#include <algorithm>
#include <random>

#include "doctest.h"
#include "entangle/lp/lp.hpp"

using namespace entangle;
using namespace entangle::lp;
using exact::Rat;
using exact::Vec;

namespace {

// Brute-force oracle for 2-variable programs of ≤ rows: best objective over
// all pairwise intersection points that satisfy every row.
std::optional<Rat> vertex_enumeration_max(const std::vector<Constraint>& rows, const Vec& obj) {
  std::optional<Rat> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i].coeffs;
      const auto& b = rows[j].coeffs;
      const Rat d = a[0] * b[1] - a[1] * b[0];
      if (d.is_zero()) continue;
      const Vec x{(rows[i].rhs * b[1] - a[1] * rows[j].rhs) / d,
                  (a[0] * rows[j].rhs - rows[i].rhs * b[0]) / d};
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [&](const Constraint& c) { return dot(c.coeffs, x) <= c.rhs; });
      if (ok && (!best || dot(obj, x) > *best)) best = dot(obj, x);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("max over an interval") {
  LinearProgram p(1);
  p.add(Vec{Rat(1)}, Relation::GreaterEqual, Rat(0));
  p.add(Vec{Rat(1)}, Relation::LessEqual, Rat(1));
  p.set_objective(Vec{Rat(1)}, Sense::Maximize);
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::Feasible);
  CHECK(*out.optimum == Rat(1));
  CHECK(*out.point == Vec{Rat(1)});
}

TEST_CASE("contradictory bounds give a farkas certificate") {
  LinearProgram p(1);
  p.add(Vec{Rat(1)}, Relation::GreaterEqual, Rat(1));
  p.add(Vec{Rat(1)}, Relation::LessEqual, Rat(0));
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::Infeasible);
  REQUIRE(out.farkas.has_value());
  CHECK(verify_farkas(p, *out.farkas));
  CHECK((*out.farkas)[0] == (*out.farkas)[1]);
  CHECK((*out.farkas)[0].sign() > 0);
}

TEST_CASE("max x+y over the square") {
  LinearProgram p(2);
  std::vector<Constraint> rows;
  for (int s : {1, -1}) {
    for (std::size_t i = 0; i < 2; ++i) {
      Vec c(2);
      c[i] = Rat(s);
      p.add(c, Relation::LessEqual, Rat(1));
      rows.push_back({c, Relation::LessEqual, Rat(1)});
    }
  }
  const Vec obj{Rat(1), Rat(1)};
  p.set_objective(obj, Sense::Maximize);
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::Feasible);
  CHECK(*out.optimum == Rat(2));
  CHECK(*out.point == Vec{Rat(1), Rat(1)});
  CHECK(*vertex_enumeration_max(rows, obj) == Rat(2));
}

TEST_CASE("unbounded and equality programs") {
  LinearProgram p(2);
  p.add(Vec{Rat(1), Rat(-1)}, Relation::Equal, Rat(0));
  p.set_objective(Vec{Rat(1), Rat(0)}, Sense::Maximize);
  CHECK(lp_solve(p).status == LpStatus::Unbounded);
  p.set_objective(Vec{Rat(1), Rat(-1)}, Sense::Minimize);
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::Feasible);
  CHECK(*out.optimum == Rat(0));

  LinearProgram q(2);
  q.add(Vec{Rat(1), Rat(1)}, Relation::Equal, Rat(1));
  q.add(Vec{Rat(2), Rat(2)}, Relation::Equal, Rat(3));
  auto bad = lp_solve(q);
  REQUIRE(bad.status == LpStatus::Infeasible);
  CHECK(verify_farkas(q, *bad.farkas));
}

TEST_CASE("random programs agree with vertex enumeration and survive row permutation") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> coef(-5, 5), rhs(0, 6);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<Constraint> rows;
    // bounding box keeps the program bounded
    for (int s : {1, -1})
      for (std::size_t i = 0; i < 2; ++i) {
        Vec c(2);
        c[i] = Rat(s);
        rows.push_back({c, Relation::LessEqual, Rat(10)});
      }
    std::uniform_int_distribution<int> extra(1, 5);
    const int m = extra(rng);
    for (int r = 0; r < m; ++r) {
      rows.push_back({Vec{Rat(coef(rng)), Rat(coef(rng))}, Relation::LessEqual, Rat(rhs(rng) - 3)});
    }
    const Vec obj{Rat(coef(rng)), Rat(coef(rng))};

    auto solve = [&](const std::vector<Constraint>& rs) {
      LinearProgram p(2);
      for (const auto& c : rs) p.add(c.coeffs, c.relation, c.rhs);
      p.set_objective(obj, Sense::Maximize);
      return std::make_pair(p, lp_solve(p));
    };
    auto [prog, out] = solve(rows);
    auto oracle = vertex_enumeration_max(rows, obj);
    if (out.status == LpStatus::Feasible) {
      ++feasible;
      CHECK(satisfies(prog, *out.point));
      REQUIRE(oracle.has_value());
      CHECK(*out.optimum == *oracle);
      std::vector<Constraint> shuffled = rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto again = solve(shuffled);
      CHECK(again.second.optimum == out.optimum);
    } else {
      ++infeasible;
      CHECK(out.status == LpStatus::Infeasible);
      CHECK_FALSE(oracle.has_value());
      CHECK(verify_farkas(prog, *out.farkas));
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
