#pragma once

#include <optional>
#include <vector>

#include "entangle/exact/matrix.hpp"

namespace entangle::exact {

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Mat a);

/// Some x with A·x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

std::size_t rank(const Mat& a);
std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim);

/// Dimension of the affine hull of a nonempty point set.
std::size_t affine_rank(const std::vector<Vec>& points);

/// Basis of {x : A·x = 0}, one vector per free column, with a 1 in that column.
std::vector<Vec> kernel_basis(const Mat& a);

/// Extends linearly independent `basis` to a basis of Q^ambient by appending
/// standard unit vectors in index order. Returns only the appended vectors.
/// Throws InvalidInput if `basis` is dependent.
std::vector<Vec> complete_basis(const std::vector<Vec>& basis, std::size_t ambient);

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t dim);

/// Inverse of a square matrix; throws InvalidInput if singular.
Mat inverse(const Mat& a);

/// Fraction-free (Bareiss) determinant over any exact field.
template <class T>
T bareiss_det(Matrix<T> a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

inline Rat det(const Mat& a) { return bareiss_det(a); }
inline QSqrt2 qsqrt2_det(const QMat& a) { return bareiss_det(a); }

QMat to_qsqrt2(const Mat& a);

/// Symmetric LDLᵀ without pivoting. Stops at the first zero pivot.
struct LdlResult {
  Mat lower;               ///< unit lower triangular
  std::vector<Rat> pivots; ///< diagonal of D, possibly truncated at a zero pivot
  bool complete = true;    ///< false when a zero pivot stopped the factorization
};
LdlResult symmetric_ldl(const Mat& a);

/// Positive multiple of `v` with coprime integer entries. `v` must be nonzero.
Vec primitive_integer(const Vec& v);

}  // namespace entangle::exact
