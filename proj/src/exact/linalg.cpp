#include "entangle/exact/linalg.hpp"

#include <numeric>

namespace entangle::exact {

Echelon rref(Mat a) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    }
    const Rat inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rat factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw DimensionMismatch("solve_linear: " + a.shape() + " system with rhs of length " +
                            std::to_string(b.size()));
  }
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::size_t rank(const Mat& a) {
  // Fraction-free elimination; only zero/nonzero pattern matters for rank.
  Mat m = a;
  std::size_t r = 0;
  Rat prev(1);
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
      }
      m(i, col) = Rat(0);
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Mat::from_rows(vectors, dim));
}

std::size_t affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidInput("affine rank of an empty point set");
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(diffs, points[0].size());
}

std::vector<Vec> kernel_basis(const Mat& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = Rat(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<std::size_t> chosen;
  std::vector<Vec> current;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    current.push_back(vectors[i]);
    if (rank(current, dim) == current.size()) {
      chosen.push_back(i);
    } else {
      current.pop_back();
    }
  }
  return chosen;
}

std::vector<Vec> complete_basis(const std::vector<Vec>& basis, std::size_t ambient) {
  for (const auto& b : basis) {
    if (b.size() != ambient) throw DimensionMismatch("complete_basis: vector of wrong length");
  }
  if (rank(basis, ambient) != basis.size()) {
    throw InvalidInput("complete_basis: input vectors are linearly dependent");
  }
  std::vector<Vec> current = basis;
  std::vector<Vec> added;
  for (std::size_t i = 0; i < ambient && current.size() < ambient; ++i) {
    current.push_back(Vec::unit(ambient, i));
    if (rank(current, ambient) == current.size()) {
      added.push_back(current.back());
    } else {
      current.pop_back();
    }
  }
  return added;
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square " + a.shape());
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rat(1);
  }
  const Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

QMat to_qsqrt2(const Mat& a) {
  QMat q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = QSqrt2(a(i, j));
  return q;
}

LdlResult symmetric_ldl(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("LDL of non-square " + a.shape());
  if (!(a == a.transpose())) throw InvalidInput("LDL of a non-symmetric matrix");
  const std::size_t n = a.rows();
  LdlResult out{Mat::identity(n), {}, true};
  Mat s = a;  // running Schur complement
  for (std::size_t k = 0; k < n; ++k) {
    const Rat pivot = s(k, k);
    if (pivot.is_zero()) {
      out.complete = false;
      return out;
    }
    out.pivots.push_back(pivot);
    for (std::size_t i = k + 1; i < n; ++i) out.lower(i, k) = s(i, k) / pivot;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= out.lower(i, k) * s(k, j);
  }
  return out;
}

Vec primitive_integer(const Vec& v) {
  if (v.is_zero()) throw InvalidInput("primitive_integer of the zero vector");
  mpz_class lcm = 1;
  for (const auto& x : v) lcm = ::lcm(lcm, x.den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    mpz_class k = x.num() * (lcm / x.den());
    g = ::gcd(g, k);
    ints.push_back(std::move(k));
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(mpz_class(ints[i] / g));
  return out;
}

}  // namespace entangle::exact
