#pragma once

#include <string>

#include "entangle/exact/rat.hpp"

namespace entangle::exact {

/// Element a + b·√2 of the field Q(√2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(int a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QSqrt2(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rat(0), Rat(1)}; }

  [[nodiscard]] const Rat& rational_part() const { return a_; }
  [[nodiscard]] const Rat& sqrt2_part() const { return b_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Conjugate a − b·√2.
  [[nodiscard]] QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Field norm a² − 2b² (product with the conjugate).
  [[nodiscard]] Rat norm() const { return a_ * a_ - Rat(2) * b_ * b_; }
  /// Exact sign of the real number a + b·√2.
  [[nodiscard]] int sign() const;
  [[nodiscard]] QSqrt2 inverse() const;
  [[nodiscard]] std::string str() const;

  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rat a = a_ * o.a_ + Rat(2) * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rat a_{0};
  Rat b_{0};
};

}  // namespace entangle::exact
