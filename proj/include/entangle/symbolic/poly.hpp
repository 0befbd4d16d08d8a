#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "entangle/exact/rat.hpp"
#include "entangle/exact/error.hpp"

namespace entangle::symbolic {

using exact::Rat;

/// Variables a1..a4 (indices 0..3) and b1..b4 (indices 4..7).
constexpr std::size_t kVariables = 8;
using Assignment = std::array<Rat, kVariables>;

class MultilinearityViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Multilinear polynomial: monomials are bitmasks over the 8 variables, no
/// zero coefficient is ever stored, so is_zero is an emptiness test.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(std::size_t i);
  static MultiPoly alpha(std::size_t i) { return var(i - 1); }  // 1-based
  static MultiPoly beta(std::size_t i) { return var(3 + i); }   // 1-based

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const std::map<std::uint8_t, Rat>& terms() const { return terms_; }
  [[nodiscard]] Rat coefficient(std::uint8_t mask) const;
  [[nodiscard]] Rat eval(const Assignment& x) const;
  /// Canonical text, monomials in increasing mask order.
  [[nodiscard]] std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rat(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }
  /// Throws MultilinearityViolation if the product would square a variable.
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(std::uint8_t mask, const Rat& c);
  std::map<std::uint8_t, Rat> terms_;
};

}  // namespace entangle::symbolic
