#include "entangle/polytope/dd.hpp"

#include <algorithm>

#include "entangle/exact/linalg.hpp"

namespace entangle::polytope {

namespace {

struct Ray {
  Vec v;
  std::vector<bool> zeros;  // rows (by original index) tight at v, among processed rows
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::size_t count(const std::vector<bool>& a) {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
}

}  // namespace

std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& inequalities, std::size_t dim) {
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw DimensionMismatch("double description: inequality of wrong length");
  }
  const std::vector<std::size_t> basis_rows = exact::independent_subset(inequalities, dim);
  if (basis_rows.size() != dim) throw InvalidInput("double description: cone is not pointed");

  const std::size_t nrows = inequalities.size();
  std::vector<bool> processed(nrows, false);
  for (auto i : basis_rows) processed[i] = true;

  // Initial simplicial cone: columns of the inverse of the chosen rows.
  std::vector<Vec> chosen;
  for (auto i : basis_rows) chosen.push_back(inequalities[i]);
  const exact::Mat inv = exact::inverse(exact::Mat::from_rows(chosen, dim));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray r{exact::primitive_integer(inv.col(k)), std::vector<bool>(nrows, false)};
    for (std::size_t t = 0; t < dim; ++t) r.zeros[basis_rows[t]] = (t != k);
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < nrows; ++i) {
    if (processed[i]) continue;
    const Vec& a = inequalities[i];
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].v);
      const int s = val[k].sign();
      (s > 0 ? pos : (s < 0 ? neg : zero)).push_back(k);
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (auto k : pos) next.push_back(rays[k]);
    for (auto k : zero) {
      Ray r = rays[k];
      r.zeros[i] = true;
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<bool> common(nrows, false);
        for (std::size_t t = 0; t < nrows; ++t) common[t] = rays[p].zeros[t] && rays[n].zeros[t];
        if (count(common) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (subset(common, rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec combo = val[p] * rays[n].v - val[n] * rays[p].v;
        common[i] = true;
        next.push_back(Ray{exact::primitive_integer(combo), std::move(common)});
      }
    }
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<Vec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace entangle::polytope
