#pragma once

#include <array>
#include <string>
#include <vector>

#include "entangle/symbolic/poly.hpp"

namespace entangle::symbolic {

using PolyVec = std::array<MultiPoly, 3>;
using PolyMat = std::array<std::array<MultiPoly, 3>, 3>;

enum class Side { Alpha, Beta };

MultiPoly gamma(Side side, std::size_t i);  // 1-based
std::array<MultiPoly, 4> symbolic_weights(Side side);
std::array<PolyVec, 4> symbolic_kite_rays(Side side);
MultiPoly symbolic_R(Side side);

/// ω = s1·T1U2ᵀ + s2·T2U2ᵀ + s3·T2U1ᵀ + s4·T3U3ᵀ; the true signs are (1, −1, 1, 1).
PolyMat symbolic_omega(const std::array<int, 4>& signs = {1, -1, 1, 1});
MultiPoly symbolic_f(const PolyMat& m);

struct IdentityReport {
  bool holds = false;            // f(ω) + R(α)R(β) is the zero polynomial
  bool same_support = false;     // f(ω) and −R(α)R(β) have identical monomial support
  std::size_t f_terms = 0;
  std::size_t rr_terms = 0;
  std::string residual;
};

IdentityReport check_magical_identity(const std::array<int, 4>& signs = {1, -1, 1, 1});

/// 1 + sign·γ_var, a factor with range (0, 2) on (−1, 1).
struct UnitFactor {
  int sign;
  std::size_t var;  // 1-based
  [[nodiscard]] MultiPoly poly() const;
};

/// c_i = p1·q1 + p2·q2 with every factor of the form 1 ± γ_j.
struct Factorization {
  std::size_t index;  // 1-based
  std::array<std::array<UnitFactor, 2>, 2> summands;
};

const std::array<Factorization, 4>& weight_factorizations();

struct PositivityReport {
  std::array<bool, 4> matches{};  // expansion equals the raw c_i, on both α and β variables
  [[nodiscard]] bool all() const { return matches[0] && matches[1] && matches[2] && matches[3]; }
};

PositivityReport check_weight_positivity();

/// c1 t1 + c3 t3 = c2 t2 + c4 t4 as polynomial vectors.
bool check_balance();

std::string factorization_str(const Factorization& f);

}  // namespace entangle::symbolic
