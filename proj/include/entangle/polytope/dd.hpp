#pragma once

#include <vector>

#include "entangle/exact/matrix.hpp"

namespace entangle::polytope {

using exact::Rat;
using exact::Vec;

/// Extreme rays of the cone {x ∈ Q^dim : a·x ≥ 0 for every row a}, by the
/// double description method with the combinatorial adjacency test.
///
/// The cone must be pointed (the rows span Q^dim); otherwise InvalidInput is
/// thrown. Rays come back as primitive integer vectors in lexicographic order.
/// A cone equal to {0} yields an empty list.
std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& inequalities, std::size_t dim);

}  // namespace entangle::polytope
