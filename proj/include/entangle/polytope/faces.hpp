#pragma once

#include <vector>

#include "entangle/polytope/polytope.hpp"

namespace entangle::polytope {

/// Nonempty proper face, stored as a closed set of the vertex-facet incidence.
struct Face {
  std::vector<std::size_t> vertex_indices;  // sorted
  std::size_t dim = 0;
  std::vector<std::size_t> tight_facets;    // sorted, every facet containing the face

  [[nodiscard]] bool has_vertex(std::size_t v) const;
  [[nodiscard]] std::vector<Vec> points(const Polytope& k) const;
  friend bool operator==(const Face&, const Face&) = default;
};

/// Exposing functional of a face: the sum of its tight facet inequalities,
/// φ(x) = Σ (offset_i − normal_i·x). φ ≥ 0 on K and φ = 0 exactly on the face.
struct ExposingFunctional {
  Vec normal;  // Σ normal_i
  Rat offset;  // Σ offset_i, so φ(x) = offset − normal·x

  [[nodiscard]] Rat operator()(const Vec& x) const { return offset - dot(normal, x); }
};

ExposingFunctional exposing_functional(const Polytope& k, const std::vector<std::size_t>& tight_facets);

/// All nonempty proper faces ordered by (dim, vertex indices).
std::vector<Face> all_faces(const Polytope& k);

/// Faces of dimension exactly d, 0 ≤ d ≤ dim(K) − 1.
std::vector<Face> faces_of_dim(const Polytope& k, std::size_t d);

/// Number of faces of each dimension 0..dim−1.
std::vector<std::size_t> f_vector(const Polytope& k);

/// The face {v} for a vertex index.
Face vertex_face(const Polytope& k, std::size_t v);

}  // namespace entangle::polytope
