#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entangle/lp/lp.hpp"
#include "entangle/polytope/polytope.hpp"

namespace entangle::cones {

using exact::Mat;
using exact::Rat;
using exact::Vec;

struct Properness {
  bool generating = false;
  bool salient = false;
  [[nodiscard]] bool proper() const { return generating && salient; }
};

/// generating ⇔ rank(generators) = dim; salient ⇔ some e has e·g ≥ 1 on every generator.
/// Throws InvalidInput for an empty list, a zero generator or a length mismatch.
Properness check_proper(const std::vector<Vec>& generators, std::size_t dim);

/// Proper polyhedral cone. Extreme rays and dual extreme rays are computed
/// once, as positive primitive integer vectors in lexicographic order.
class Cone {
 public:
  /// Throws InvalidInput ("not salient" / "not generating") for non-proper input.
  Cone(std::string name, std::size_t dim, std::vector<Vec> generators);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vec>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<Vec>& extreme_rays() const { return rays_; }
  /// Extreme rays of the dual cone; they are also the facet inequalities f·x ≥ 0.
  [[nodiscard]] const std::vector<Vec>& dual_rays() const { return dual_rays_; }

  [[nodiscard]] bool contains(const Vec& x) const;
  [[nodiscard]] bool interior_contains(const Vec& x) const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<Vec> generators_;
  std::vector<Vec> rays_;
  std::vector<Vec> dual_rays_;
};

/// Positive primitive integer representative of a ray.
Vec canonical_ray(const Vec& v);

/// Generators g with g ∉ cone(other generators), after merging parallel copies.
std::vector<Vec> irredundant_rays(const std::vector<Vec>& generators, std::size_t dim);

Cone dual(const Cone& c);
bool is_classical(const Cone& c);
/// Same set of extreme rays.
bool same_rays(const Cone& a, const Cone& b);

/// C ≅ 𝒞(K): x ∈ C at level t = e·x corresponds to (t·y, t) with y ∈ K.
/// `section` maps ambient coordinates to (t·y, t); `section_inverse` undoes it.
struct ConeBase {
  polytope::Polytope body;  // vertex i comes from extreme ray i
  Vec level;
  Mat section;
  Mat section_inverse;

  /// Point of K for a cone element with e·x > 0.
  [[nodiscard]] Vec to_body(const Vec& x) const;
  /// The cone element at level 1 over y ∈ K.
  [[nodiscard]] Vec lift(const Vec& y) const;
};

/// Default level: primitive integer multiple of the sum of the dual rays.
/// A supplied level must be strictly positive on every extreme ray.
ConeBase base(const Cone& c, const std::optional<Vec>& level = std::nullopt);

/// Elements of V1 ⊗ V2 are m1×m2 matrices with (φ ⊗ ψ)(z) = φᵀ z ψ.
using TensorElement = Mat;

std::vector<TensorElement> min_tensor_generators(const Cone& c1, const Cone& c2);

struct TensorMembership {
  bool contains = true;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (dual ray of C1, dual ray of C2)
};

/// z ∈ C1 ⊛ C2 ⇔ φᵀ z ψ ≥ 0 for every pair of dual extreme rays.
TensorMembership max_tensor_contains(const Cone& c1, const Cone& c2, const TensorElement& z);

/// LP for z = Σ λ_ij r_i s_jᵀ with λ ≥ 0. Variables are λ in row-major (i, j)
/// order; the first m1·m2 constraints are the entry equations.
lp::LpOutcome min_tensor_contains(const Cone& c1, const Cone& c2, const TensorElement& z);

/// From an infeasible min_tensor_contains outcome: Y with rᵀ Y s ≥ 0 on every
/// product of extreme rays and ⟨Y, z⟩ < 0.
Mat separating_matrix(const lp::LpOutcome& outcome, std::size_t m1, std::size_t m2);

struct NuclearResult {
  bool equal = true;
  std::size_t max_rays = 0;
  std::optional<TensorElement> witness;
};

/// Whether C1 ⊙ C2 = C1 ⊛ C2, by enumerating the extreme rays of C1 ⊛ C2.
/// Throws InvalidInput when m1·m2 exceeds `guard`.
NuclearResult nuclear_check(const Cone& c1, const Cone& c2, std::size_t guard = 12);

/// Flattens a matrix row-major.
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace entangle::cones
