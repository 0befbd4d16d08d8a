#include "entangle/exact/qsqrt2.hpp"

#include "entangle/exact/error.hpp"

namespace entangle::exact {

int QSqrt2::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a² and 2b² wins; they never tie since √2 is irrational.
  return a_ * a_ > Rat(2) * b_ * b_ ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero in Q(sqrt2)");
  const Rat n = norm();
  return {a_ / n, -b_ / n};
}

std::string QSqrt2::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt2";
}

}  // namespace entangle::exact
