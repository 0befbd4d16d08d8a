#include "entangle/polytope/polytope.hpp"

#include <algorithm>

#include "entangle/exact/linalg.hpp"
#include "entangle/polytope/dd.hpp"

namespace entangle::polytope {

Vec AffineHull::lift(const Vec& c) const {
  if (c.size() != directions.size()) throw DimensionMismatch("affine hull lift");
  Vec x = origin;
  for (std::size_t i = 0; i < c.size(); ++i) x += c[i] * directions[i];
  return x;
}

AffineHull affine_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidInput("affine hull of an empty set");
  const std::size_t n = points[0].size();
  AffineHull hull;
  hull.origin = points[0];
  std::vector<Vec> diffs;
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionMismatch("points of different dimensions");
    diffs.push_back(p - points[0]);
  }
  for (auto i : exact::independent_subset(diffs, n)) hull.directions.push_back(diffs[i]);
  const std::size_t k = hull.directions.size();
  const Mat basis = Mat::from_columns(hull.directions, n);
  for (const auto& d : diffs) {
    if (k == 0) {
      hull.coords.emplace_back(0);
      continue;
    }
    auto c = exact::solve_linear(basis, d);
    ensure(c.has_value(), "affine hull: point outside its own hull");
    hull.coords.push_back(std::move(*c));
  }
  return hull;
}

Vec barycenter(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidInput("barycenter of an empty set");
  Vec s(points[0].size());
  for (const auto& p : points) s += p;
  return s / Rat(static_cast<long>(points.size()));
}

Polytope Polytope::from_points(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidInput("polytope from an empty point list");
  const std::size_t n = points[0].size();
  if (n == 0) throw InvalidInput("polytope in dimension 0");
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionMismatch("points of different dimensions");
  }
  AffineHull hull = affine_hull(points);
  if (hull.dim() < n) {
    throw NotFullDimensional("point set spans an affine subspace of dimension " +
                                 std::to_string(hull.dim()) + " in R^" + std::to_string(n),
                             std::move(hull));
  }

  std::vector<Vec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    Vec r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = p[j];
    r[n] = Rat(1);
    rows.push_back(std::move(r));
  }
  Polytope out;
  out.dim_ = n;
  for (const auto& ray : cone_extreme_rays(rows, n + 1)) {
    Vec normal(n);
    for (std::size_t j = 0; j < n; ++j) normal[j] = -ray[j];
    out.facets_.push_back(Facet{std::move(normal), ray[n]});
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& a, const Facet& b) {
    if (a.normal == b.normal) return a.offset < b.offset;
    return a.normal < b.normal;
  });

  for (const auto& p : points) {
    if (std::find(out.vertices_.begin(), out.vertices_.end(), p) != out.vertices_.end()) continue;
    std::vector<Vec> tight;
    for (const auto& f : out.facets_) {
      if (f.slack(p).is_zero()) tight.push_back(f.normal);
    }
    if (exact::rank(tight, n) == n) out.vertices_.push_back(p);
  }
  out.build_incidence();
  return out;
}

Polytope Polytope::from_inequalities(const std::vector<Facet>& facets, std::size_t dim) {
  if (dim == 0) throw InvalidInput("polytope in dimension 0");
  std::vector<Vec> rows;
  for (const auto& f : facets) {
    if (f.normal.size() != dim) throw DimensionMismatch("facet normal of wrong length");
    Vec r(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) r[j] = -f.normal[j];
    r[dim] = f.offset;
    rows.push_back(std::move(r));
  }
  rows.push_back(Vec::unit(dim + 1, dim));
  if (exact::rank(rows, dim + 1) < dim + 1) {
    throw InvalidInput("inequality system is unbounded (facet normals do not span)");
  }
  std::vector<Vec> verts;
  for (const auto& ray : cone_extreme_rays(rows, dim + 1)) {
    if (ray[dim].is_zero()) throw InvalidInput("inequality system is unbounded");
    Vec x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = ray[j] / ray[dim];
    verts.push_back(std::move(x));
  }
  if (verts.empty()) throw InvalidInput("inequality system is infeasible");
  std::sort(verts.begin(), verts.end());
  try {
    return from_points(verts);
  } catch (const NotFullDimensional& e) {
    throw InvalidInput(std::string("inequality system is not full-dimensional: ") + e.what());
  }
}

void Polytope::build_incidence() {
  incidence_.assign(vertices_.size(), std::vector<bool>(facets_.size(), false));
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      const Rat s = facets_[f].slack(vertices_[v]);
      ensure(s.sign() >= 0, "vertex violates a facet inequality");
      incidence_[v][f] = s.is_zero();
    }
  }
}

std::vector<std::size_t> Polytope::facets_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (incidence_[v][f]) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> Polytope::vertices_on(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (incidence_[v][f]) out.push_back(v);
  }
  return out;
}

bool Polytope::contains(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point dimension differs from polytope");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.slack(x).sign() >= 0; });
}

bool Polytope::strictly_contains(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point dimension differs from polytope");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.slack(x).sign() > 0; });
}

Vec Polytope::barycenter() const { return polytope::barycenter(vertices_); }

bool same_vertex_set(const Polytope& a, const Polytope& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

}  // namespace entangle::polytope
