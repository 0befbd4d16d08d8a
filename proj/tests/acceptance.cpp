// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "entangle/cli/cli.hpp"
#include "entangle/cones/json_io.hpp"
#include "entangle/polytope/dd.hpp"
#include "entangle/polytope/delta.hpp"
#include "entangle/sandwich/sandwich.hpp"
#include "entangle/symbolic/identities.hpp"
#include "entangle/witness/witness.hpp"

using namespace entangle;
using cones::Cone;
using exact::Mat;
using exact::Rat;
using exact::Vec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Entry {
  Cone cone;
  bool classical;
};

std::vector<Entry> load_corpus() {
  const std::string dir = ENTANGLE_CORPUS_DIR;
  const auto manifest = cones::read_json_file(dir + "/manifest.json");
  std::vector<Entry> out;
  for (const auto& e : manifest["cones"]) {
    out.push_back({cones::load_cone(dir + "/" + e["file"].get<std::string>()), e["classical"].get<bool>()});
  }
  return out;
}

const std::vector<Entry>& corpus() {
  static const std::vector<Entry> c = load_corpus();
  return c;
}

const Cone& named(const std::string& name) {
  for (const auto& e : corpus())
    if (e.cone.name() == name) return e.cone;
  throw InvalidInput("corpus has no cone '" + name + "'");
}

Outcome identity() {
  const auto rep = symbolic::check_magical_identity();
  return {rep.holds && rep.same_support,
          "residual " + rep.residual + ", " + std::to_string(rep.f_terms) + " monomials on each side"};
}

Outcome positivity() {
  const auto rep = symbolic::check_weight_positivity();
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) s += std::string(i ? " " : "") + "c" + std::to_string(i + 1) + (rep.matches[i] ? "=ok" : "=BAD");
  return {rep.all() && symbolic::check_balance(), s};
}

Outcome delta_values() {
  std::vector<std::string> bad;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Vec> pts{Vec(n)};
    for (std::size_t i = 0; i < n; ++i) pts.push_back(Vec::unit(n, i));
    const auto d = polytope::delta(polytope::Polytope::from_points(pts)).d;
    if (d != n - 1) bad.push_back("simplex" + std::to_string(n) + "=" + std::to_string(d));
  }
  const auto square = polytope::Polytope::from_points(
      {Vec{Rat(-1), Rat(-1)}, Vec{Rat(1), Rat(-1)}, Vec{Rat(1), Rat(1)}, Vec{Rat(-1), Rat(1)}});
  if (polytope::delta(square).d != 0) bad.emplace_back("square");
  if (polytope::delta(cones::base(named("pyramid")).body).d != 1) bad.emplace_back("pyramid");
  std::size_t checked = 0;
  for (const auto& e : corpus()) {
    const auto k = cones::base(e.cone).body;
    const auto d = polytope::delta(k).d;
    if (k.is_simplex() ? d != k.dim() - 1 : d + 2 > k.dim()) bad.push_back(e.cone.name());
    ++checked;
  }
  return {bad.empty(), bad.empty() ? "simplices n-1, square 0, pyramid 1, " + std::to_string(checked) + " corpus bases in range"
                                   : "wrong: " + bad.front()};
}

std::map<std::string, sandwich::Sandwich>& sandwiches() {
  static std::map<std::string, sandwich::Sandwich> s;
  return s;
}

Outcome sandwich_suite() {
  std::size_t built = 0, refused = 0, random = 0;
  std::vector<std::string> bad;
  for (const auto& e : corpus()) {
    if (e.classical) {
      try {
        sandwich::construct_sandwich(e.cone);
        bad.push_back(e.cone.name() + " not refused");
      } catch (const sandwich::ClassicalConeError&) {
        ++refused;
      }
      continue;
    }
    try {
      const auto con = sandwich::construct_sandwich(e.cone);
      if (!sandwich::verify_sandwich(e.cone, con.sandwich).ok()) {
        bad.push_back(e.cone.name());
        continue;
      }
      sandwiches().emplace(e.cone.name(), con.sandwich);
      ++built;
      if (e.cone.name().rfind("random", 0) == 0) ++random;
    } catch (const Error& ex) {
      bad.push_back(e.cone.name() + ": " + ex.what());
    }
  }
  const bool ok = bad.empty() && random >= 20;
  return {ok, std::to_string(built) + " sandwiches verified (" + std::to_string(random) + " random), " +
                  std::to_string(refused) + " classical refused" + (bad.empty() ? "" : "; failed: " + bad.front())};
}

Outcome entangleability() {
  constexpr std::size_t guard = 64;
  std::size_t pairs = 0;
  std::vector<std::string> bad;
  std::vector<const Cone*> list;
  for (const auto& e : corpus())
    if (!e.classical && sandwiches().count(e.cone.name())) list.push_back(&e.cone);
  for (const Cone* a : list) {
    for (const Cone* b : list) {
      if (a->dim() * b->dim() > guard) continue;
      ++pairs;
      const auto cert =
          witness::build_witness(*a, sandwiches().at(a->name()), *b, sandwiches().at(b->name()));
      const auto lp = witness::lp_cross_check(*a, *b, cert.w);
      if (!cert.checks.all() || !lp.infeasible || !lp.farkas_valid) bad.push_back(a->name() + " x " + b->name());
    }
  }
  const std::size_t expected = list.size() * list.size();
  return {bad.empty() && pairs == expected && pairs > 0,
          std::to_string(pairs - bad.size()) + "/" + std::to_string(pairs) +
              " ordered pairs certified and LP-confirmed" + (bad.empty() ? "" : "; failed: " + bad.front())};
}

Outcome nuclearity() {
  std::vector<std::string> lines;
  bool ok = true;
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"rplus2", "square"}, {"rplus3", "kite_half"}, {"rplus3", "kite_mixed"}}) {
    const auto r = cones::nuclear_check(named(a), named(b));
    ok = ok && r.equal;
    lines.push_back(a + " x " + b + (r.equal ? " equal (" : " NOT equal (") + std::to_string(r.max_rays) + " rays)");
  }
  std::string s;
  for (const auto& l : lines) s += (s.empty() ? "" : ", ") + l;
  return {ok, s};
}

Outcome qubit() {
  bool ok = true;
  std::string failed;
  for (const auto& c : cli::qubit_checks()) {
    if (!c.pass) {
      ok = false;
      if (failed.empty()) failed = c.name + ": " + c.detail;
    }
  }
  return {ok, ok ? "six exact checks pass" : "failed " + failed};
}

Outcome chsh() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> den(1, 1000);
  std::uniform_int_distribution<int> kind(0, 7);
  auto coord = [&]() {
    const int k = kind(rng);
    if (k == 0) return Rat(1);
    if (k == 1) return Rat(-1);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-q, q);
    return Rat(num(rng), q);
  };
  auto point = [&]() {
    while (true) {
      Vec p{coord(), coord()};
      if (p[0].abs() == Rat(1) && p[1].abs() == Rat(1)) continue;
      return p;
    }
  };
  std::size_t strict = 0, boundary = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec p = point(), q = point();
    if (p[0].abs() == Rat(1) || p[1].abs() == Rat(1)) ++boundary;
    if (witness::chsh_check(p, q).strict) ++strict;
  }
  bool corners = true;
  for (long sx : {-1, 1})
    for (long sy : {-1, 1})
      for (long t : {1, 3}) corners = corners && !sandwich::blunt_square_contains(Vec{Rat(sx * t), Rat(sy * t), Rat(t)});
  return {strict == n && corners, std::to_string(strict) + "/" + std::to_string(n) + " strict (" +
                                      std::to_string(boundary) + " on an edge), corners rejected: " +
                                      (corners ? "yes" : "no")};
}

// Dual functionals found by scanning an integer grid, independent of the double description.
std::vector<Vec> grid_duals(const Cone& c, long n) {
  std::vector<Vec> out;
  for (long x = -n; x <= n; ++x)
    for (long y = -n; y <= n; ++y)
      for (long z = -n; z <= n; ++z) {
        const Vec f{Rat(x), Rat(y), Rat(z)};
        if (f.is_zero()) continue;
        bool in = true;
        for (const auto& g : c.generators()) in = in && dot(f, g).sign() >= 0;
        if (in) out.push_back(f);
      }
  return out;
}

bool sampled_max_contains(const std::vector<Vec>& d1, const std::vector<Vec>& d2, const Mat& z) {
  const Mat zt = z.transpose();
  for (const auto& phi : d1) {
    const Vec row = zt * phi;
    for (const auto& psi : d2)
      if (dot(row, psi).sign() < 0) return false;
  }
  return true;
}

long max_entry(const std::vector<Vec>& vs) {
  long m = 0;
  for (const auto& v : vs)
    for (const auto& x : v) m = std::max(m, std::abs(x.num().get_si()));
  return m;
}

Outcome oracles() {
  std::vector<std::string> bad;
  for (const auto& e : corpus()) {
    const Cone& c = e.cone;
    if (polytope::cone_extreme_rays(c.dual_rays(), c.dim()) != c.extreme_rays()) bad.push_back("dd " + c.name());
    if (!cones::same_rays(cones::dual(cones::dual(c)), c)) bad.push_back("bipolar " + c.name());
    const auto k = cones::base(c).body;
    if (!polytope::same_vertex_set(polytope::Polytope::from_inequalities(k.facets(), k.dim()), k))
      bad.push_back("H/V " + c.name());
  }

  constexpr long grid = 6;
  std::vector<std::pair<const Cone*, std::vector<Vec>>> small;
  for (const auto& e : corpus()) {
    if (e.cone.dim() != 3 || max_entry(e.cone.dual_rays()) > grid) continue;
    small.emplace_back(&e.cone, grid_duals(e.cone, grid));
  }
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::size_t compared = 0, inside = 0;
  for (const auto& [a, da] : small) {
    for (const auto& [b, db] : small) {
      std::vector<Mat> tests;
      for (int t = 0; t < 4; ++t) {
        Mat z(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) z(i, j) = Rat(entry(rng));
        tests.push_back(z);
      }
      Mat sep(3, 3);
      for (const auto& r : a->extreme_rays()) sep += Mat::outer(r, b->extreme_rays().front());
      tests.push_back(sep);
      if (!cones::is_classical(*a) && !cones::is_classical(*b) && sandwiches().count(a->name()) &&
          sandwiches().count(b->name())) {
        const auto cert = witness::build_witness(*a, sandwiches().at(a->name()), *b, sandwiches().at(b->name()));
        tests.push_back(cert.w);
        tests.push_back(cert.w - Mat::identity(3) * Rat(1, 50));
      }
      for (const auto& z : tests) {
        const bool lib = cones::max_tensor_contains(*a, *b, z).contains;
        if (lib != sampled_max_contains(da, db, z)) bad.push_back("max tensor " + a->name() + " x " + b->name());
        ++compared;
        inside += lib ? 1 : 0;
      }
    }
  }
  return {bad.empty() && small.size() >= 3,
          "dd, bipolar and H/V roundtrips on " + std::to_string(corpus().size()) + " cones; " + std::to_string(compared) +
              " max-tensor tests (" + std::to_string(inside) + " inside) on " + std::to_string(small.size()) +
              " 3-d cones" + (bad.empty() ? "" : "; mismatch: " + bad.front())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"symbolic identity f(omega) = -R(alpha)R(beta)", identity},
      {"weight positivity factorizations", positivity},
      {"delta values", delta_values},
      {"sandwich suite", sandwich_suite},
      {"end-to-end entangleability", entangleability},
      {"nuclearity of classical pairs", nuclearity},
      {"qubit demo", qubit},
      {"CHSH property suite", chsh},
      {"oracle equivalences", oracles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", s);
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " -- "
              << o.detail << " [" << secs << "]" << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
