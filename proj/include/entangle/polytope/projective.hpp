#pragma once

#include "entangle/polytope/polytope.hpp"

namespace entangle::polytope {

/// x ↦ (B·x + z) / (⟨w, x⟩ + k), with det [[B, z], [wᵀ, k]] ≠ 0.
struct ProjectiveMap {
  Mat linear;       // B, n×n
  Vec translation;  // z
  Vec denom_normal; // w
  Rat denom_offset; // k

  static ProjectiveMap identity(std::size_t n);
  /// Throws InvalidInput on shape errors or a singular block matrix.
  static ProjectiveMap make(Mat b, Vec z, Vec w, Rat k);

  [[nodiscard]] std::size_t dim() const { return translation.size(); }
  [[nodiscard]] Rat denominator(const Vec& x) const { return dot(denom_normal, x) + denom_offset; }
  [[nodiscard]] bool is_affine() const { return denom_normal.is_zero(); }
  /// Throws InvalidInput when the denominator vanishes at x.
  [[nodiscard]] Vec operator()(const Vec& x) const;
  /// The (n+1)×(n+1) matrix acting on homogeneous coordinates (x ; t).
  [[nodiscard]] Mat homogeneous() const;
};

/// Image polytope. Throws InvalidInput if the denominator is ≤ 0 at some vertex.
Polytope apply_projective(const ProjectiveMap& p, const Polytope& k);

/// Supporting hyperplane written as f(x) ≥ t on K, with equality somewhere on K.
struct Halfspace {
  Vec f;
  Rat t;
};

struct SentToInfinity {
  ProjectiveMap map;
  Polytope image;
};

/// Projective map, well defined on K, making the images of H1 and H2 parallel:
/// x ↦ (x − x0) / (f1(x) + f2(x) − t1 − t2) with x0 the vertex barycenter.
/// Throws InvalidInput unless both hyperplanes support K and K ∩ H1 ∩ H2 = ∅.
SentToInfinity send_to_infinity(const Polytope& k, const Halfspace& h1, const Halfspace& h2);

}  // namespace entangle::polytope
