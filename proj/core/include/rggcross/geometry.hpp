#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "rggcross/rng.hpp"

namespace rggcross::geometry {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const {
    double n = norm();
    return {x / n, y / n, z / n};
  }
};

/// Unit vector on S^2. Construction rejects non-unit input.
class SpherePoint {
 public:
  explicit SpherePoint(const Vec3& v) : v_(v) {
    if (std::abs(v.norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("SpherePoint: vector is not unit length");
    }
  }
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  SpherePoint antipode() const { return SpherePoint(Vec3{-v_.x, -v_.y, -v_.z}); }

 private:
  Vec3 v_;
};

struct Point2 {
  double u = 0.0;
  double v = 0.0;
};

/// 2-D linear subspace through the origin, parameterized by its unit
/// normal together with a deterministic orthonormal in-plane basis.
struct ProjectionPlane {
  SpherePoint normal;
  Vec3 basis_u;
  Vec3 basis_v;
};

/// Ball window centered at the origin.
struct BallWindow {
  double radius;

  double volume() const {
    return 4.0 / 3.0 * M_PI * radius * radius * radius;
  }
  /// The canonical window: volume-one ball, R = (3/(4*pi))^(1/3).
  static BallWindow unit_volume() {
    return BallWindow{std::cbrt(3.0 / (4.0 * M_PI))};
  }
};

/// Measurable in-plane region: the whole plane, a disk, or an
/// axis-aligned rectangle [u_min,u_max] x [v_min,v_max].
struct Region2 {
  enum class Kind { FullPlane, Disk, Rect };
  Kind kind = Kind::FullPlane;
  Point2 center{0.0, 0.0};  // Disk
  double disk_radius = 0.0;
  double u_min = 0.0, u_max = 0.0, v_min = 0.0, v_max = 0.0;  // Rect

  static Region2 full_plane() { return Region2{}; }
  static Region2 disk(Point2 c, double r) {
    Region2 reg;
    reg.kind = Kind::Disk;
    reg.center = c;
    reg.disk_radius = r;
    return reg;
  }
  static Region2 rect(double u0, double v0, double u1, double v1) {
    Region2 reg;
    reg.kind = Kind::Rect;
    reg.u_min = u0;
    reg.v_min = v0;
    reg.u_max = u1;
    reg.v_max = v1;
    return reg;
  }

  bool contains(const Point2& p) const {
    switch (kind) {
      case Kind::FullPlane:
        return true;
      case Kind::Disk: {
        double du = p.u - center.u, dv = p.v - center.v;
        return du * du + dv * dv <= disk_radius * disk_radius;
      }
      case Kind::Rect:
        return p.u >= u_min && p.u <= u_max && p.v >= v_min && p.v <= v_max;
    }
    return false;
  }
};

/// Plane with the given unit normal; basis completed deterministically
/// (cross with e3, or e1 near the poles of e3). Antipodal normals give
/// the same subspace.
ProjectionPlane plane_from_sphere_point(const SpherePoint& x);

/// In-plane coordinates (p . basis_u, p . basis_v) of the orthogonal
/// projection of p onto the plane.
Point2 project(const Vec3& p, const ProjectionPlane& plane);

/// Geodesic distance on the unit sphere, in [0, pi]. The inner product
/// is clamped into [-1, 1] before acos.
double spherical_distance(const SpherePoint& x, const SpherePoint& y);

/// Uniform sample from the open positive octant of S^2.
SpherePoint sample_sphere_pp(RngStream& rng);

/// Uniform sample from the full sphere S^2.
Vec3 sample_sphere_uniform(RngStream& rng);

/// Length of the intersection of the ball with the line through the
/// in-plane point q perpendicular to the plane: 2*sqrt(max(R^2-|q|^2,0)).
double chord_length(const ProjectionPlane& plane, const Point2& q,
                    const BallWindow& ball);

}  // namespace rggcross::geometry
