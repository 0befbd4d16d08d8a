#pragma once

#include <optional>
#include <vector>

#include "entangle/exact/matrix.hpp"

namespace entangle::polytope {

using exact::Mat;
using exact::Rat;
using exact::Vec;

/// Facet inequality normal·x ≤ offset, scaled to a primitive integer vector.
struct Facet {
  Vec normal;
  Rat offset;

  [[nodiscard]] Rat slack(const Vec& x) const { return offset - dot(normal, x); }
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Affine hull of a point set: origin + span(directions). `coords` are the
/// coordinates of each input point in that frame.
struct AffineHull {
  Vec origin;
  std::vector<Vec> directions;
  std::vector<Vec> coords;

  [[nodiscard]] std::size_t dim() const { return directions.size(); }
  /// Maps frame coordinates back to the ambient space.
  [[nodiscard]] Vec lift(const Vec& c) const;
};

AffineHull affine_hull(const std::vector<Vec>& points);

/// Raised when V-rep input does not span its ambient space; carries the hull so
/// the caller can re-embed.
class NotFullDimensional : public InvalidInput {
 public:
  NotFullDimensional(const std::string& what, AffineHull hull)
      : InvalidInput(what), hull_(std::move(hull)) {}
  [[nodiscard]] const AffineHull& hull() const { return hull_; }

 private:
  AffineHull hull_;
};

/// Full-dimensional polytope with both representations, irredundant, plus the
/// vertex-facet incidence. Immutable after construction.
class Polytope {
 public:
  /// V→H by double description. Redundant and duplicate points are dropped;
  /// surviving vertices keep their input order. Throws NotFullDimensional.
  static Polytope from_points(const std::vector<Vec>& points);
  /// H→V. Each facet reads normal·x ≤ offset. Throws InvalidInput when the
  /// set is empty, unbounded or not full-dimensional.
  static Polytope from_inequalities(const std::vector<Facet>& facets, std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vec>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
  [[nodiscard]] bool incident(std::size_t vertex, std::size_t facet) const {
    return incidence_[vertex][facet];
  }
  /// Facets tight at vertex v.
  [[nodiscard]] std::vector<std::size_t> facets_at(std::size_t v) const;
  /// Vertices on facet f.
  [[nodiscard]] std::vector<std::size_t> vertices_on(std::size_t f) const;

  [[nodiscard]] bool contains(const Vec& x) const;
  [[nodiscard]] bool strictly_contains(const Vec& x) const;
  [[nodiscard]] bool is_simplex() const { return vertices_.size() == dim_ + 1; }
  [[nodiscard]] Vec barycenter() const;

 private:
  Polytope() = default;
  void build_incidence();

  std::size_t dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<bool>> incidence_;
};

/// Same vertex set up to order.
bool same_vertex_set(const Polytope& a, const Polytope& b);

Vec barycenter(const std::vector<Vec>& points);

}  // namespace entangle::polytope
