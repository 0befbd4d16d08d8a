#pragma once

#include <array>
#include <string>
#include <vector>

#include "entangle/cones/cone.hpp"
#include "entangle/cones/json_io.hpp"
#include "entangle/polytope/faces.hpp"
#include "entangle/polytope/projective.hpp"

namespace entangle::sandwich {

using cones::Cone;
using cones::Json;
using exact::Mat;
using exact::Rat;
using exact::Vec;

/// Q_α = conv{(1, α1), (α2, 1), (−1, α3), (α4, −1)} with every |α_i| < 1.
struct Kite {
  std::array<Rat, 4> alpha;

  /// Throws InvalidInput unless every |α_i| < 1.
  static Kite make(const std::array<Rat, 4>& alpha);
  /// The four rays t1..t4 at level 1.
  [[nodiscard]] std::array<Vec, 4> rays() const;
};

/// p = (a, b; t) lies in the cone over [−1, 1]² minus its corners.
bool blunt_square_contains(const Vec& p);

Cone kite_cone(const Kite& k);

/// embed: R³ → R^m carries 𝒞(Q_α) into C; squash: R^m → R³ carries C into
/// 𝒞(S_b); squash·embed = I₃.
struct Sandwich {
  Kite kite;
  Mat embed;   // m × 3
  Mat squash;  // 3 × m
};

/// Intermediate data of the construction. Points live in the normalized
/// coordinates of the base (after the projective step and the translation
/// putting the barycenter of F at 0), where f is linear.
struct SandwichTrace {
  std::size_t d = 0;
  std::size_t v1_index = 0;
  polytope::Face face;
  bool parallel = false;           // exposing hyperplanes already parallel, no projective step
  polytope::ProjectiveMap projective;
  Vec translation;                 // subtracted after the projective step
  Mat normalize;                   // homogeneous (n+1)×(n+1) map from base to normalized coordinates
  std::vector<Vec> vertices;       // normalized vertices of K, in base order
  Vec f;                           // linear, f(v1) = 1, f = 0 on F
  std::vector<Vec> v_basis;        // v1 followed by a basis of span(F)
  std::vector<Vec> w_basis;
  Vec ell;                         // on W coordinates
  Rat mu;
  Rat lambda;
  Vec x1, x2, y1, y2, v1, v2;
  bool pyramid_claim = false;      // K ∩ V = conv(F ∪ {v1}) checked exactly
};

class ClassicalConeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct Construction {
  Sandwich sandwich;
  SandwichTrace trace;
};

/// Throws ClassicalConeError for a classical cone. Internal consistency
/// failures raise InternalCheckFailed.
Construction construct_sandwich(const Cone& c);

struct SandwichReport {
  bool identity = false;  // squash·embed = I₃
  bool embed_in_cone = false;
  bool squash_blunt = false;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return identity && embed_in_cone && squash_blunt; }
};

SandwichReport verify_sandwich(const Cone& c, const Sandwich& s);

Json sandwich_to_json(const Sandwich& s);
Json trace_to_json(const SandwichTrace& t);
Sandwich sandwich_from_json(const Json& j);

}  // namespace entangle::sandwich
