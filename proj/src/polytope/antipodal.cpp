#include "entangle/polytope/antipodal.hpp"

#include <algorithm>

#include "entangle/lp/lp.hpp"

namespace entangle::polytope {

namespace {

using lp::LinearProgram;
using lp::Relation;

bool disjoint(const Face& a, const Face& b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.vertex_indices.begin(), a.vertex_indices.end(), b.vertex_indices.begin(),
                        b.vertex_indices.end(), std::back_inserter(common));
  return common.empty();
}

// Variables (ell, c1, c2).
std::optional<Vec> separating_functional(const Polytope& l, const Face& g1, const Face& g2) {
  const std::size_t n = l.dim();
  LinearProgram prog(n + 2);
  for (std::size_t v = 0; v < l.vertices().size(); ++v) {
    Vec lo(n + 2), hi(n + 2);
    for (std::size_t i = 0; i < n; ++i) lo[i] = hi[i] = l.vertices()[v][i];
    lo[n] = Rat(-1);
    hi[n + 1] = Rat(-1);
    prog.add(lo, g1.has_vertex(v) ? Relation::Equal : Relation::GreaterEqual, Rat(0));
    prog.add(hi, g2.has_vertex(v) ? Relation::Equal : Relation::LessEqual, Rat(0));
  }
  Vec gap(n + 2);
  gap[n] = Rat(-1);
  gap[n + 1] = Rat(1);
  prog.add(gap, Relation::Equal, Rat(1));
  auto sol = lp::find_feasible(prog);
  if (!sol) return std::nullopt;
  Vec ell(n);
  for (std::size_t i = 0; i < n; ++i) ell[i] = (*sol)[i];
  return ell;
}

// Convex weights on g1 ∪ g2 (g1 first) reproducing z.
std::optional<Vec> hull_weights(const Polytope& l, const Face& g1, const Face& g2, const Vec& z) {
  std::vector<std::size_t> idx = g1.vertex_indices;
  idx.insert(idx.end(), g2.vertex_indices.begin(), g2.vertex_indices.end());
  const std::size_t m = idx.size();
  LinearProgram prog(m);
  for (std::size_t j = 0; j < m; ++j) prog.add_nonnegative(j);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Vec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = l.vertices()[idx[j]][i];
    prog.add(row, Relation::Equal, z[i]);
  }
  Vec ones(m);
  for (std::size_t j = 0; j < m; ++j) ones[j] = Rat(1);
  prog.add(ones, Relation::Equal, Rat(1));
  return lp::find_feasible(prog);
}

}  // namespace

AntipodalPair antipodal_through(const Polytope& l, const Vec& z) {
  if (z.size() != l.dim()) throw DimensionMismatch("antipodal_through: point dimension");
  require(l.strictly_contains(z), "antipodal_through: point is not interior");
  const std::vector<Face> faces = all_faces(l);
  for (const auto& g1 : faces) {
    for (const auto& g2 : faces) {
      if (!disjoint(g1, g2)) continue;
      auto weights = hull_weights(l, g1, g2, z);
      if (!weights) continue;
      auto ell = separating_functional(l, g1, g2);
      if (!ell) continue;

      const std::size_t m1 = g1.vertex_indices.size();
      Rat mu(0);
      Vec s1(l.dim()), s2(l.dim());
      for (std::size_t j = 0; j < weights->size(); ++j) {
        const Rat& w = (*weights)[j];
        if (j < m1) {
          mu += w;
          s1 += l.vertices()[g1.vertex_indices[j]] * w;
        } else {
          s2 += l.vertices()[g2.vertex_indices[j - m1]] * w;
        }
      }
      ensure(mu.sign() > 0 && mu < Rat(1), "antipodal_through: interior point on a face");
      AntipodalPair pair{s1 / mu, s2 / (Rat(1) - mu), std::move(*ell), mu, g1, g2};
      ensure(verify_antipodal(l, z, pair), "antipodal_through: post-condition failed");
      return pair;
    }
  }
  throw InternalCheckFailed("antipodal_through: no antipodal face pair found");
}

bool verify_antipodal(const Polytope& l, const Vec& z, const AntipodalPair& pair) {
  if (!l.contains(pair.x1) || !l.contains(pair.x2)) return false;
  if (!(pair.mu.sign() > 0 && pair.mu < Rat(1))) return false;
  if (pair.x1 * pair.mu + pair.x2 * (Rat(1) - pair.mu) != z) return false;
  const Rat lo = dot(pair.ell, pair.x1);
  const Rat hi = dot(pair.ell, pair.x2);
  if (hi - lo != Rat(1)) return false;
  for (const auto& v : l.vertices()) {
    const Rat e = dot(pair.ell, v);
    if (e < lo || e > hi) return false;
  }
  const Rat ez = dot(pair.ell, z);
  return lo < ez && ez < hi;
}

}  // namespace entangle::polytope
