#pragma once

#include "entangle/polytope/faces.hpp"

namespace entangle::polytope {

/// Antipodal pair through z: ell(x1) = min_L ell < ell(z) < max_L ell = ell(x2),
/// ell(x2) − ell(x1) = 1, and mu·x1 + (1 − mu)·x2 = z with mu ∈ (0, 1).
struct AntipodalPair {
  Vec x1;
  Vec x2;
  Vec ell;
  Rat mu;
  Face g1;  // face of L containing x1 on which ell is minimal
  Face g2;  // face of L containing x2 on which ell is maximal
};

/// Finite search over ordered pairs (G1, G2) of proper faces of L, in face
/// order. The first pair for which (a) some ell is constant-minimal on G1 and
/// constant-maximal on G2 and (b) z ∈ conv(G1 ∪ G2) wins; both are exact LPs.
/// Requires z in the interior of the full-dimensional polytope L.
AntipodalPair antipodal_through(const Polytope& l, const Vec& z);

/// Checks every post-condition of AntipodalPair exactly.
bool verify_antipodal(const Polytope& l, const Vec& z, const AntipodalPair& pair);

}  // namespace entangle::polytope
