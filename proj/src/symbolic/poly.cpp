#include "entangle/symbolic/poly.hpp"

namespace entangle::symbolic {

MultiPoly::MultiPoly(const Rat& c) { add_term(0, c); }

MultiPoly MultiPoly::var(std::size_t i) {
  require(i < kVariables, "variable index out of range");
  MultiPoly p;
  p.add_term(static_cast<std::uint8_t>(1u << i), Rat(1));
  return p;
}

void MultiPoly::add_term(std::uint8_t mask, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat MultiPoly::coefficient(std::uint8_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::eval(const Assignment& x) const {
  Rat total(0);
  for (const auto& [mask, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < kVariables; ++i)
      if (mask & (1u << i)) term *= x[i];
    total += term;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < kVariables; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < 4 ? "a" : "b") + std::to_string(i % 4 + 1);
    }
    const bool neg = c.sign() < 0;
    const Rat mag = c.abs();
    std::string term = mono.empty() ? mag.str() : (mag == Rat(1) ? mono : mag.str() + "*" + mono);
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) throw MultilinearityViolation("product squares a variable");
      out.add_term(static_cast<std::uint8_t>(ma | mb), ca * cb);
    }
  }
  return out;
}

}  // namespace entangle::symbolic
