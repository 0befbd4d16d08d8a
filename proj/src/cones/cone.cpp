#include "entangle/cones/cone.hpp"

#include <algorithm>

#include "entangle/exact/linalg.hpp"
#include "entangle/polytope/dd.hpp"

namespace entangle::cones {

using lp::LinearProgram;
using lp::Relation;

namespace {

void check_generators(const std::vector<Vec>& generators, std::size_t dim) {
  require(!generators.empty(), "cone has no generators");
  for (const auto& g : generators) {
    if (g.size() != dim) throw InvalidInput("generator length differs from ambient_dim");
    require(!g.is_zero(), "zero generator");
  }
}

}  // namespace

Properness check_proper(const std::vector<Vec>& generators, std::size_t dim) {
  check_generators(generators, dim);
  Properness p;
  p.generating = exact::rank(generators, dim) == dim;
  LinearProgram prog(dim);
  for (const auto& g : generators) prog.add(g, Relation::GreaterEqual, Rat(1));
  p.salient = lp::find_feasible(prog).has_value();
  return p;
}

Vec canonical_ray(const Vec& v) { return exact::primitive_integer(v); }

std::vector<Vec> irredundant_rays(const std::vector<Vec>& generators, std::size_t dim) {
  std::vector<Vec> distinct;
  for (const auto& g : generators) distinct.push_back(canonical_ray(g));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Vec> rays;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const std::size_t others = distinct.size() - 1;
    LinearProgram prog(others);
    for (std::size_t j = 0; j < others; ++j) prog.add_nonnegative(j);
    for (std::size_t a = 0; a < dim; ++a) {
      Vec row(others);
      for (std::size_t j = 0, col = 0; j < distinct.size(); ++j) {
        if (j != i) row[col++] = distinct[j][a];
      }
      prog.add(row, Relation::Equal, distinct[i][a]);
    }
    if (!lp::find_feasible(prog)) rays.push_back(distinct[i]);
  }
  return rays;
}

Cone::Cone(std::string name, std::size_t dim, std::vector<Vec> generators)
    : name_(std::move(name)), dim_(dim), generators_(std::move(generators)) {
  const Properness p = check_proper(generators_, dim_);
  require(p.salient, "cone '" + name_ + "' is not salient");
  require(p.generating, "cone '" + name_ + "' is not generating");
  rays_ = irredundant_rays(generators_, dim_);
  dual_rays_ = polytope::cone_extreme_rays(rays_, dim_);
}

bool Cone::contains(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("cone membership: vector length");
  return std::all_of(dual_rays_.begin(), dual_rays_.end(),
                     [&](const Vec& f) { return dot(f, x).sign() >= 0; });
}

bool Cone::interior_contains(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("cone membership: vector length");
  return std::all_of(dual_rays_.begin(), dual_rays_.end(),
                     [&](const Vec& f) { return dot(f, x).sign() > 0; });
}

Cone dual(const Cone& c) { return Cone("dual(" + c.name() + ")", c.dim(), c.dual_rays()); }

bool is_classical(const Cone& c) { return c.extreme_rays().size() == c.dim(); }

bool same_rays(const Cone& a, const Cone& b) {
  return a.dim() == b.dim() && a.extreme_rays() == b.extreme_rays();
}

Vec ConeBase::to_body(const Vec& x) const {
  const Vec s = section * x;
  const std::size_t n = s.size() - 1;
  require(s[n].sign() > 0, "point is not at positive level");
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = s[i] / s[n];
  return y;
}

Vec ConeBase::lift(const Vec& y) const {
  Vec h(y.size() + 1);
  for (std::size_t i = 0; i < y.size(); ++i) h[i] = y[i];
  h[y.size()] = Rat(1);
  return section_inverse * h;
}

ConeBase base(const Cone& c, const std::optional<Vec>& level) {
  const std::size_t m = c.dim();
  Vec e(m);
  if (level) {
    e = *level;
    if (e.size() != m) throw DimensionMismatch("level length differs from ambient_dim");
  } else {
    for (const auto& f : c.dual_rays()) e += f;
    e = exact::primitive_integer(e);
  }
  for (const auto& r : c.extreme_rays()) {
    require(dot(e, r).sign() > 0, "level is not strictly positive on the cone");
  }
  require(m >= 2, "base of a 1-dimensional cone is a point");
  std::vector<Vec> cols = exact::kernel_basis(Mat::from_rows({e}, m));
  cols.push_back(e / dot(e, e));
  const Mat frame = Mat::from_columns(cols, m);
  const Mat section = exact::inverse(frame);

  std::vector<Vec> points;
  for (const auto& r : c.extreme_rays()) {
    const Vec s = section * r;
    Vec y(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) y[i] = s[i] / s[m - 1];
    points.push_back(std::move(y));
  }
  ConeBase b{polytope::Polytope::from_points(points), e, section, frame};
  ensure(b.body.vertices().size() == points.size(), "base: extreme ray is not a vertex");
  return b;
}

std::vector<TensorElement> min_tensor_generators(const Cone& c1, const Cone& c2) {
  std::vector<TensorElement> out;
  for (const auto& r : c1.extreme_rays())
    for (const auto& s : c2.extreme_rays()) out.push_back(Mat::outer(r, s));
  return out;
}

TensorMembership max_tensor_contains(const Cone& c1, const Cone& c2, const TensorElement& z) {
  if (z.rows() != c1.dim() || z.cols() != c2.dim()) {
    throw DimensionMismatch("tensor element shape " + z.shape());
  }
  TensorMembership t;
  for (std::size_t i = 0; i < c1.dual_rays().size(); ++i) {
    const Vec zt = z.transpose() * c1.dual_rays()[i];
    for (std::size_t j = 0; j < c2.dual_rays().size(); ++j) {
      if (dot(zt, c2.dual_rays()[j]).sign() < 0) {
        t.contains = false;
        t.violations.emplace_back(i, j);
      }
    }
  }
  return t;
}

lp::LpOutcome min_tensor_contains(const Cone& c1, const Cone& c2, const TensorElement& z) {
  if (z.rows() != c1.dim() || z.cols() != c2.dim()) {
    throw DimensionMismatch("tensor element shape " + z.shape());
  }
  const auto& r = c1.extreme_rays();
  const auto& s = c2.extreme_rays();
  const std::size_t vars = r.size() * s.size();
  LinearProgram prog(vars);
  for (std::size_t a = 0; a < c1.dim(); ++a) {
    for (std::size_t b = 0; b < c2.dim(); ++b) {
      Vec row(vars);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) row[i * s.size() + j] = r[i][a] * s[j][b];
      prog.add(row, Relation::Equal, z(a, b));
    }
  }
  for (std::size_t k = 0; k < vars; ++k) prog.add_nonnegative(k);
  return lp::lp_solve(prog);
}

Mat separating_matrix(const lp::LpOutcome& outcome, std::size_t m1, std::size_t m2) {
  require(outcome.status == lp::LpStatus::Infeasible && outcome.farkas.has_value(),
          "separating_matrix needs an infeasible outcome");
  Mat y(m1, m2);
  for (std::size_t a = 0; a < m1; ++a)
    for (std::size_t b = 0; b < m2; ++b) y(a, b) = (*outcome.farkas)[a * m2 + b];
  return y;
}

Vec vectorize(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unvectorize: length");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

NuclearResult nuclear_check(const Cone& c1, const Cone& c2, std::size_t guard) {
  const std::size_t m1 = c1.dim(), m2 = c2.dim();
  require(m1 * m2 <= guard, "nuclear_check: tensor dimension " + std::to_string(m1 * m2) +
                                " exceeds guard " + std::to_string(guard));
  std::vector<Vec> ineqs;
  for (const auto& f : c1.dual_rays())
    for (const auto& g : c2.dual_rays()) ineqs.push_back(vectorize(Mat::outer(f, g)));
  const auto rays = polytope::cone_extreme_rays(ineqs, m1 * m2);
  NuclearResult out;
  out.max_rays = rays.size();
  for (const auto& ray : rays) {
    const Mat z = unvectorize(ray, m1, m2);
    if (min_tensor_contains(c1, c2, z).status != lp::LpStatus::Feasible) {
      out.equal = false;
      out.witness = z;
      break;
    }
  }
  return out;
}

}  // namespace entangle::cones
