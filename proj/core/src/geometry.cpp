#include "rggcross/geometry.hpp"

#include <algorithm>

namespace rggcross::geometry {

ProjectionPlane plane_from_sphere_point(const SpherePoint& x) {
  const Vec3& n = x.vec();
  // Reference axis away from the normal so the cross product is stable.
  Vec3 a = (std::abs(n.z) < 0.9) ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  Vec3 u = a.cross(n).normalized();
  Vec3 v = n.cross(u);
  return ProjectionPlane{x, u, v};
}

Point2 project(const Vec3& p, const ProjectionPlane& plane) {
  return Point2{p.dot(plane.basis_u), p.dot(plane.basis_v)};
}

double spherical_distance(const SpherePoint& x, const SpherePoint& y) {
  double d = std::clamp(x.vec().dot(y.vec()), -1.0, 1.0);
  return std::acos(d);
}

Vec3 sample_sphere_uniform(RngStream& rng) {
  // Normalized 3-D Gaussian.
  for (;;) {
    Vec3 g{rng.normal(), rng.normal(), rng.normal()};
    double n = g.norm();
    if (n > 1e-100) {
      return g * (1.0 / n);
    }
  }
}

SpherePoint sample_sphere_pp(RngStream& rng) {
  // The coordinate-wise absolute value pushes the uniform measure on
  // S^2 onto the normalized uniform measure on the positive octant.
  for (;;) {
    Vec3 v = sample_sphere_uniform(rng);
    v = {std::abs(v.x), std::abs(v.y), std::abs(v.z)};
    if (v.x > 0.0 && v.y > 0.0 && v.z > 0.0) {
      return SpherePoint(v.normalized());
    }
  }
}

double chord_length(const ProjectionPlane& /*plane*/, const Point2& q,
                    const BallWindow& ball) {
  double h2 = ball.radius * ball.radius - (q.u * q.u + q.v * q.v);
  return 2.0 * std::sqrt(std::max(h2, 0.0));
}

}  // namespace rggcross::geometry
