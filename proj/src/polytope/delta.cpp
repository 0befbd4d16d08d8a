#include "entangle/polytope/delta.hpp"

namespace entangle::polytope {

DeltaResult delta(const Polytope& k) {
  const std::vector<Face> faces = all_faces(k);
  for (std::size_t d = 0; d < k.dim(); ++d) {
    for (std::size_t u = 0; u < k.vertices().size(); ++u) {
      for (const auto& face : faces) {
        if (face.dim != d || face.has_vertex(u)) continue;
        Vec mid = (k.vertices()[u] + barycenter(face.points(k))) / Rat(2);
        if (k.strictly_contains(mid)) return {d, u, face, std::move(mid)};
      }
    }
  }
  throw InternalCheckFailed("delta: no vertex/facet pair meets the interior");
}

}  // namespace entangle::polytope
