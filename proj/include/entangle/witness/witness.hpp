#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entangle/sandwich/sandwich.hpp"

namespace entangle::witness {

using cones::Cone;
using cones::Json;
using exact::Mat;
using exact::Rat;
using exact::Vec;
using sandwich::Sandwich;

using Params = std::array<Rat, 4>;

/// Multipliers turning kite rays t_i into T_i with T1 + T3 = T2 + T4.
struct KiteWeights {
  std::array<Rat, 4> c;
};

KiteWeights kite_weights(const Params& gamma);

/// T1 U2ᵀ − T2 U2ᵀ + T2 U1ᵀ + T3 U3ᵀ.
Mat omega(const Params& alpha, const Params& beta);

/// m11 + m12 + m21 − m22 − 2 m33.
Rat f_functional(const Mat& m);
/// Coefficient matrix of f, so that f(m) = ⟨F, m⟩.
Mat f_matrix();

/// (γ1γ2 − 1)(γ3 − γ4) − (γ3γ4 − 1)(γ1 − γ2).
Rat R(const Params& gamma);

struct ChshValue {
  Rat value;
  bool strict;
};

/// xx' + xy' + yx' − yy' for blunt-square points p = (x, y), q = (x', y').
/// Throws InvalidInput if either point is outside the blunt square.
ChshValue chsh_check(const Vec& p, const Vec& q);

/// Swaps the two square coordinates: α ↦ (α2, α1, α4, α3), embed ↦ embed·σ, squash ↦ σ·squash.
Sandwich sigma_fix(const Sandwich& s);
Params sigma_params(const Params& alpha);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct CertificateChecks {
  CheckResult a;  // W ∈ C1 ⊛ C2
  CheckResult b;  // rᵀ G s < 0 on every pair of extreme rays
  CheckResult c;  // g(W) = −R(α)R(β) ≥ 0
  CheckResult d;  // W ≠ 0 and internal consistency
  [[nodiscard]] bool all() const { return a.pass && b.pass && c.pass && d.pass; }
  [[nodiscard]] std::string first_failure() const;
};

struct WitnessCertificate {
  Cone c1;
  Cone c2;
  Sandwich s1;  // possibly σ-fixed
  Sandwich s2;
  bool sigma_fixed = false;
  Params alpha;  // of s1, after the fix
  Params beta;
  Mat omega;
  Mat w;
  Mat g;
  CertificateChecks checks;
};

/// Throws InvalidInput if either sandwich fails verification.
WitnessCertificate build_witness(const Cone& c1, const Sandwich& s1, const Cone& c2, const Sandwich& s2);

/// Re-derives every check from the certificate's data alone.
CertificateChecks verify_certificate(const WitnessCertificate& cert);

struct LpCrossCheck {
  bool infeasible = false;
  bool farkas_valid = false;
  std::optional<Mat> separating;  // Y with rᵀ Y s ≥ 0 and ⟨Y, W⟩ < 0
};

/// Independent confirmation that W ∉ C1 ⊙ C2 through the membership LP.
LpCrossCheck lp_cross_check(const Cone& c1, const Cone& c2, const Mat& w);

Json certificate_to_json(const WitnessCertificate& cert);
/// Checks are not trusted from the file; they are recomputed by verify_certificate.
WitnessCertificate certificate_from_json(const Json& j);

}  // namespace entangle::witness
