#include "entangle/symbolic/identities.hpp"

namespace entangle::symbolic {

MultiPoly gamma(Side side, std::size_t i) {
  return side == Side::Alpha ? MultiPoly::alpha(i) : MultiPoly::beta(i);
}

std::array<MultiPoly, 4> symbolic_weights(Side side) {
  auto g = [side](std::size_t i) { return gamma(side, i); };
  return {MultiPoly(2) + g(2) + g(4) + g(3) * (g(2) - g(4)), MultiPoly(2) + g(1) + g(3) + g(4) * (g(1) - g(3)),
          MultiPoly(2) - g(4) - g(2) + g(1) * (g(4) - g(2)), MultiPoly(2) - g(3) - g(1) + g(2) * (g(3) - g(1))};
}

std::array<PolyVec, 4> symbolic_kite_rays(Side side) {
  auto g = [side](std::size_t i) { return gamma(side, i); };
  return {PolyVec{MultiPoly(1), g(1), MultiPoly(1)}, PolyVec{g(2), MultiPoly(1), MultiPoly(1)},
          PolyVec{MultiPoly(-1), g(3), MultiPoly(1)}, PolyVec{g(4), MultiPoly(-1), MultiPoly(1)}};
}

MultiPoly symbolic_R(Side side) {
  auto g = [side](std::size_t i) { return gamma(side, i); };
  return (g(1) * g(2) - MultiPoly(1)) * (g(3) - g(4)) - (g(3) * g(4) - MultiPoly(1)) * (g(1) - g(2));
}

namespace {

std::array<PolyVec, 4> weighted(Side side) {
  auto t = symbolic_kite_rays(side);
  const auto c = symbolic_weights(side);
  for (std::size_t i = 0; i < 4; ++i)
    for (auto& x : t[i]) x = c[i] * x;
  return t;
}

void add_outer(PolyMat& m, int sign, const PolyVec& a, const PolyVec& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] += Rat(sign) * (a[i] * b[j]);
}

}  // namespace

PolyMat symbolic_omega(const std::array<int, 4>& signs) {
  const auto t = weighted(Side::Alpha);
  const auto u = weighted(Side::Beta);
  PolyMat m;
  add_outer(m, signs[0], t[0], u[1]);
  add_outer(m, signs[1], t[1], u[1]);
  add_outer(m, signs[2], t[1], u[0]);
  add_outer(m, signs[3], t[2], u[2]);
  return m;
}

MultiPoly symbolic_f(const PolyMat& m) {
  return m[0][0] + m[0][1] + m[1][0] - m[1][1] - Rat(2) * m[2][2];
}

IdentityReport check_magical_identity(const std::array<int, 4>& signs) {
  const MultiPoly f = symbolic_f(symbolic_omega(signs));
  const MultiPoly rr = symbolic_R(Side::Alpha) * symbolic_R(Side::Beta);
  const MultiPoly residual = f + rr;
  IdentityReport rep;
  rep.holds = residual.is_zero();
  rep.f_terms = f.size();
  rep.rr_terms = rr.size();
  rep.residual = residual.str();
  rep.same_support = f.size() == rr.size();
  for (const auto& [mask, c] : rr.terms()) rep.same_support = rep.same_support && !f.coefficient(mask).is_zero();
  return rep;
}

MultiPoly UnitFactor::poly() const { return MultiPoly(1) + Rat(sign) * MultiPoly::alpha(var); }

const std::array<Factorization, 4>& weight_factorizations() {
  static const std::array<Factorization, 4> table{{
      {1, {{{{{+1, 2}, {+1, 3}}}, {{{+1, 4}, {-1, 3}}}}}},
      {2, {{{{{+1, 1}, {+1, 4}}}, {{{+1, 3}, {-1, 4}}}}}},
      {3, {{{{{-1, 2}, {+1, 1}}}, {{{-1, 4}, {-1, 1}}}}}},
      {4, {{{{{-1, 1}, {+1, 2}}}, {{{-1, 3}, {-1, 2}}}}}},
  }};
  return table;
}

namespace {

// Renames a1..a4 to b1..b4.
MultiPoly to_beta(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [mask, c] : p.terms()) {
    MultiPoly mono(c);
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) mono = mono * MultiPoly::beta(i + 1);
    out += mono;
  }
  return out;
}

}  // namespace

PositivityReport check_weight_positivity() {
  PositivityReport rep;
  const auto ca = symbolic_weights(Side::Alpha);
  const auto cb = symbolic_weights(Side::Beta);
  for (const auto& fac : weight_factorizations()) {
    MultiPoly sum;
    for (const auto& s : fac.summands) sum += s[0].poly() * s[1].poly();
    const std::size_t i = fac.index - 1;
    rep.matches[i] = sum == ca[i] && to_beta(sum) == cb[i];
  }
  return rep;
}

bool check_balance() {
  for (Side side : {Side::Alpha, Side::Beta}) {
    const auto t = weighted(side);
    for (std::size_t k = 0; k < 3; ++k) {
      if (!(t[0][k] + t[2][k] - t[1][k] - t[3][k]).is_zero()) return false;
    }
  }
  return true;
}

std::string factorization_str(const Factorization& f) {
  auto factor = [](const UnitFactor& u) {
    return std::string("(1") + (u.sign > 0 ? "+" : "-") + "g" + std::to_string(u.var) + ")";
  };
  return "c" + std::to_string(f.index) + " = " + factor(f.summands[0][0]) + factor(f.summands[0][1]) + " + " +
         factor(f.summands[1][0]) + factor(f.summands[1][1]);
}

}  // namespace entangle::symbolic
