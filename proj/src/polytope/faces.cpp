#include "entangle/polytope/faces.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "entangle/exact/linalg.hpp"

namespace entangle::polytope {

bool Face::has_vertex(std::size_t v) const {
  return std::binary_search(vertex_indices.begin(), vertex_indices.end(), v);
}

std::vector<Vec> Face::points(const Polytope& k) const {
  std::vector<Vec> out;
  out.reserve(vertex_indices.size());
  for (auto v : vertex_indices) out.push_back(k.vertices()[v]);
  return out;
}

ExposingFunctional exposing_functional(const Polytope& k, const std::vector<std::size_t>& tight_facets) {
  ExposingFunctional e{Vec(k.dim()), Rat(0)};
  for (auto f : tight_facets) {
    e.normal += k.facets()[f].normal;
    e.offset += k.facets()[f].offset;
  }
  return e;
}

namespace {

Face make_face(const Polytope& k, std::vector<std::size_t> verts) {
  Face face;
  face.vertex_indices = std::move(verts);
  for (std::size_t f = 0; f < k.facets().size(); ++f) {
    const bool all = std::all_of(face.vertex_indices.begin(), face.vertex_indices.end(),
                                 [&](std::size_t v) { return k.incident(v, f); });
    if (all) face.tight_facets.push_back(f);
  }
  face.dim = exact::affine_rank(face.points(k));
  return face;
}

}  // namespace

std::vector<Face> all_faces(const Polytope& k) {
  // Every nonempty face is an intersection of facets; close the facet vertex
  // sets under intersection.
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> queue;
  std::vector<std::vector<std::size_t>> facet_sets;
  for (std::size_t f = 0; f < k.facets().size(); ++f) {
    facet_sets.push_back(k.vertices_on(f));
    if (seen.insert(facet_sets.back()).second) queue.push_back(facet_sets.back());
  }
  while (!queue.empty()) {
    const auto current = queue.front();
    queue.pop_front();
    for (const auto& fs : facet_sets) {
      std::vector<std::size_t> meet;
      std::set_intersection(current.begin(), current.end(), fs.begin(), fs.end(),
                            std::back_inserter(meet));
      if (meet.empty()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (const auto& s : seen) faces.push_back(make_face(k, s));
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return faces;
}

std::vector<Face> faces_of_dim(const Polytope& k, std::size_t d) {
  if (d >= k.dim()) throw InvalidInput("faces_of_dim: d must be below the polytope dimension");
  std::vector<Face> out;
  for (auto& f : all_faces(k)) {
    if (f.dim == d) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> f_vector(const Polytope& k) {
  std::vector<std::size_t> counts(k.dim(), 0);
  for (const auto& f : all_faces(k)) ++counts[f.dim];
  return counts;
}

Face vertex_face(const Polytope& k, std::size_t v) { return make_face(k, {v}); }

}  // namespace entangle::polytope
