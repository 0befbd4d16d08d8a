#pragma once

#include "entangle/polytope/faces.hpp"

namespace entangle::polytope {

struct DeltaResult {
  std::size_t d = 0;
  std::size_t vertex = 0;  // index of u in K.vertices()
  Face face;               // F with dim(F) = d
  Vec witness_point;       // midpoint of u and the vertex barycenter of F, interior to K
};

/// Smallest d for which some vertex u and some d-face F have the midpoint of u
/// and barycenter(F) in int(K). For a polytope this equals the minimal d over
/// all extreme / d-extreme point pairs: if any point of F sees u through the
/// interior, a supporting hyperplane through the midpoint of [u, barycenter(F)]
/// would contain u and all of F, a contradiction.
///
/// Candidates are scanned by d, then vertex index, then face order.
DeltaResult delta(const Polytope& k);

}  // namespace entangle::polytope
