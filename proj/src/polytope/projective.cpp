#include "entangle/polytope/projective.hpp"

#include "entangle/exact/linalg.hpp"

namespace entangle::polytope {

ProjectiveMap ProjectiveMap::identity(std::size_t n) {
  return ProjectiveMap{Mat::identity(n), Vec(n), Vec(n), Rat(1)};
}

ProjectiveMap ProjectiveMap::make(Mat b, Vec z, Vec w, Rat k) {
  const std::size_t n = z.size();
  if (b.rows() != n || b.cols() != n || w.size() != n) {
    throw DimensionMismatch("projective map: inconsistent block shapes");
  }
  ProjectiveMap p{std::move(b), std::move(z), std::move(w), std::move(k)};
  if (exact::det(p.homogeneous()).is_zero()) throw InvalidInput("projective map is degenerate");
  return p;
}

Vec ProjectiveMap::operator()(const Vec& x) const {
  const Rat d = denominator(x);
  if (d.is_zero()) throw InvalidInput("projective map undefined at point");
  return (linear * x + translation) / d;
}

Mat ProjectiveMap::homogeneous() const {
  const std::size_t n = dim();
  Mat h(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = linear(i, j);
    h(i, n) = translation[i];
    h(n, i) = denom_normal[i];
  }
  h(n, n) = denom_offset;
  return h;
}

Polytope apply_projective(const ProjectiveMap& p, const Polytope& k) {
  if (p.dim() != k.dim()) throw DimensionMismatch("projective map and polytope dimensions differ");
  std::vector<Vec> images;
  images.reserve(k.vertices().size());
  for (const auto& v : k.vertices()) {
    if (p.denominator(v).sign() <= 0) {
      throw InvalidInput("projective map denominator is not positive on the polytope");
    }
    images.push_back(p(v));
  }
  return Polytope::from_points(images);
}

SentToInfinity send_to_infinity(const Polytope& k, const Halfspace& h1, const Halfspace& h2) {
  const std::size_t n = k.dim();
  if (h1.f.size() != n || h2.f.size() != n) throw DimensionMismatch("send_to_infinity: functional length");
  for (const Halfspace* h : {&h1, &h2}) {
    bool touches = false;
    for (const auto& v : k.vertices()) {
      const Rat s = dot(h->f, v) - h->t;
      if (s.sign() < 0) throw InvalidInput("send_to_infinity: hyperplane cuts the polytope");
      touches = touches || s.is_zero();
    }
    if (!touches) throw InvalidInput("send_to_infinity: hyperplane does not touch the polytope");
  }
  // f1 + f2 − t1 − t2 is ≥ 0 on K and vanishes exactly on K ∩ H1 ∩ H2.
  for (const auto& v : k.vertices()) {
    if ((dot(h1.f, v) + dot(h2.f, v) - h1.t - h2.t).is_zero()) {
      throw InvalidInput("send_to_infinity: hyperplanes meet on the polytope");
    }
  }
  const Vec x0 = k.barycenter();
  ProjectiveMap p = ProjectiveMap::make(Mat::identity(n), -x0, h1.f + h2.f, -(h1.t + h2.t));
  Polytope image = apply_projective(p, k);
  return {std::move(p), std::move(image)};
}

}  // namespace entangle::polytope
