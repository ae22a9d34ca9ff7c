#include <doctest.h>

#include <cmath>

#include "rggcross/geometry.hpp"

using namespace rggcross;
using namespace rggcross::geometry;

namespace {

// Independent oracle for the canonical radius: solve (4/3)*pi*R^3 = 1 by
// bisection.
double radius_by_bisection() {
  double lo = 0.1, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (4.0 / 3.0 * M_PI * mid * mid * mid < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("ball window has volume one") {
  auto w = BallWindow::unit_volume();
  CHECK(std::abs(w.volume() - 1.0) < 1e-12);
  CHECK(w.radius == doctest::Approx(radius_by_bisection()).epsilon(1e-10));
}

TEST_CASE("sphere point rejects non-unit input") {
  CHECK_THROWS_AS(SpherePoint(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(SpherePoint(0.0, 1.0, 0.0));
}

TEST_CASE("plane_from_sphere_point axis-aligned cases") {
  auto p = plane_from_sphere_point(SpherePoint(0.0, 0.0, 1.0));
  // Plane spanned by e1, e2: both basis vectors have zero z component.
  CHECK(p.basis_u.z == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p.basis_v.z == doctest::Approx(0.0).epsilon(1e-14));

  auto q = plane_from_sphere_point(SpherePoint(1.0, 0.0, 0.0));
  CHECK(q.normal.x() == 1.0);
  CHECK(std::abs(q.basis_u.dot(q.normal.vec())) < 1e-12);
  CHECK(std::abs(q.basis_v.dot(q.normal.vec())) < 1e-12);
}

TEST_CASE("plane basis is orthonormal") {
  double s = 1.0 / std::sqrt(3.0);
  auto p = plane_from_sphere_point(SpherePoint(s, s, s));
  CHECK(std::abs(p.basis_u.dot(p.normal.vec())) < 1e-12);
  CHECK(std::abs(p.basis_v.dot(p.normal.vec())) < 1e-12);
  CHECK(std::abs(p.basis_u.dot(p.basis_v)) < 1e-12);
  CHECK(p.basis_u.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.basis_v.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("antipodal normals span the same subspace") {
  RngStream rng(5);
  for (int i = 0; i < 100; ++i) {
    auto x = sample_sphere_pp(rng);
    auto p = plane_from_sphere_point(x);
    auto q = plane_from_sphere_point(x.antipode());
    CHECK(std::abs(p.basis_u.dot(q.normal.vec())) < 1e-10);
    CHECK(std::abs(p.basis_v.dot(q.normal.vec())) < 1e-10);
    CHECK(std::abs(q.basis_u.dot(p.normal.vec())) < 1e-10);
    CHECK(std::abs(q.basis_v.dot(p.normal.vec())) < 1e-10);
  }
}

TEST_CASE("project basics") {
  auto p = plane_from_sphere_point(SpherePoint(0.0, 0.0, 1.0));
  // For normal e3 the basis is a rotation of (e1, e2) in the xy-plane;
  // check the projection against explicit dot products instead of
  // hardcoded axes.
  Vec3 v{0.3, -0.2, 0.9};
  auto pt = project(v, p);
  CHECK(pt.u == doctest::Approx(v.dot(p.basis_u)));
  CHECK(pt.v == doctest::Approx(v.dot(p.basis_v)));

  // Kernel of the projection.
  auto z = project(p.normal.vec() * 3.7, p);
  CHECK(std::abs(z.u) < 1e-12);
  CHECK(std::abs(z.v) < 1e-12);

  // Basis image.
  auto e = project(p.basis_u, p);
  CHECK(e.u == doctest::Approx(1.0));
  CHECK(e.v == doctest::Approx(0.0));
}

TEST_CASE("projection residual is parallel to the normal") {
  RngStream rng(17);
  for (int i = 0; i < 100; ++i) {
    auto plane = plane_from_sphere_point(sample_sphere_pp(rng));
    Vec3 p{rng.normal(), rng.normal(), rng.normal()};
    auto q = project(p, plane);
    Vec3 resid = p - (plane.basis_u * q.u + plane.basis_v * q.v);
    CHECK(std::abs(resid.cross(plane.normal.vec()).norm()) < 1e-10);
  }
}

TEST_CASE("spherical distance examples") {
  SpherePoint e1(1.0, 0.0, 0.0), e2(0.0, 1.0, 0.0);
  CHECK(spherical_distance(e1, e1) == doctest::Approx(0.0));
  CHECK(spherical_distance(e1, e2) == doctest::Approx(M_PI / 2.0));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(spherical_distance(e1, SpherePoint(s, s, 0.0)) ==
        doctest::Approx(M_PI / 4.0));
}

TEST_CASE("spherical distance is a metric on sampled triples") {
  RngStream rng(23);
  for (int i = 0; i < 200; ++i) {
    auto a = sample_sphere_pp(rng);
    auto b = sample_sphere_pp(rng);
    auto c = sample_sphere_pp(rng);
    CHECK(spherical_distance(a, b) == spherical_distance(b, a));
    CHECK(spherical_distance(a, c) <=
          spherical_distance(a, b) + spherical_distance(b, c) + 1e-12);
  }
}

TEST_CASE("sample_sphere_pp support and determinism") {
  RngStream rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto x = sample_sphere_pp(rng);
    CHECK(x.x() > 0.0);
    CHECK(x.y() > 0.0);
    CHECK(x.z() > 0.0);
    CHECK(x.vec().norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  RngStream a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    auto xa = sample_sphere_pp(a);
    auto xb = sample_sphere_pp(b);
    CHECK(xa.x() == xb.x());
    CHECK(xa.y() == xb.y());
    CHECK(xa.z() == xb.z());
  }
}

TEST_CASE("sample_sphere_pp mean of x1 matches quadrature") {
  // Quadrature oracle over the octant, area element dphi dz:
  // mean x1 = (2/pi) * int_0^1 sqrt(1-z^2) dz * int_0^{pi/2} cos(phi) dphi.
  const int n = 2000;
  double integral = 0.0;
  for (int i = 0; i < n; ++i) {
    double z = (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      double phi = (j + 0.5) / n * (M_PI / 2.0);
      integral += std::sqrt(1.0 - z * z) * std::cos(phi);
    }
  }
  integral *= (M_PI / 2.0) / n / n;  // cell area
  double oracle_mean = integral / (M_PI / 2.0);
  CHECK(oracle_mean == doctest::Approx(0.5).epsilon(1e-5));

  RngStream rng(2024);
  const int samples = 100000;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) sum += sample_sphere_pp(rng).x();
  double mean = sum / samples;
  // sd of x1 on the octant is below 0.24.
  CHECK(std::abs(mean - oracle_mean) < 3.0 * 0.24 / std::sqrt(samples));
}

TEST_CASE("chord length examples") {
  auto w = BallWindow::unit_volume();
  auto plane = plane_from_sphere_point(SpherePoint(0.0, 0.0, 1.0));
  double R = radius_by_bisection();
  CHECK(chord_length(plane, {0.0, 0.0}, w) == doctest::Approx(2.0 * R).epsilon(1e-10));
  CHECK(chord_length(plane, {0.0, 0.0}, w) == doctest::Approx(1.240701).epsilon(1e-5));
  CHECK(chord_length(plane, {w.radius, 0.0}, w) == doctest::Approx(0.0));
  CHECK(chord_length(plane, {w.radius / 2.0, 0.0}, w) ==
        doctest::Approx(std::sqrt(3.0) * R).epsilon(1e-10));
  CHECK(chord_length(plane, {w.radius / 2.0, 0.0}, w) ==
        doctest::Approx(1.074477).epsilon(1e-5));
}

TEST_CASE("chord length agrees with a Monte Carlo line-ball oracle") {
  auto w = BallWindow::unit_volume();
  auto plane = plane_from_sphere_point(SpherePoint(0.0, 0.0, 1.0));
  RngStream rng(31);
  for (double qu : {0.1, 0.3, 0.5}) {
    // Sample heights along the perpendicular line through (qu, 0) and
    // measure the fraction inside the ball.
    const int n = 200000;
    int inside = 0;
    for (int i = 0; i < n; ++i) {
      double z = (2.0 * rng.uniform() - 1.0) * w.radius;
      if (qu * qu + z * z <= w.radius * w.radius) ++inside;
    }
    double mc = 2.0 * w.radius * inside / n;
    CHECK(chord_length(plane, {qu, 0.0}, w) == doctest::Approx(mc).epsilon(0.02));
  }
}

TEST_CASE("chord-radius pythagorean relation") {
  auto w = BallWindow::unit_volume();
  auto plane = plane_from_sphere_point(SpherePoint(0.0, 0.0, 1.0));
  RngStream rng(41);
  for (int i = 0; i < 500; ++i) {
    double rho = rng.uniform() * w.radius;
    double angle = rng.uniform() * 2.0 * M_PI;
    Point2 q{rho * std::cos(angle), rho * std::sin(angle)};
    double c = chord_length(plane, q, w);
    CHECK(c * c / 4.0 + rho * rho == doctest::Approx(w.radius * w.radius).epsilon(1e-12));
  }
}

TEST_CASE("in-plane basis rotation is an isometry of projections") {
  // Rotating the basis about the normal rotates projected coordinates
  // but preserves in-plane distances.
  RngStream rng(53);
  auto plane = plane_from_sphere_point(sample_sphere_pp(rng));
  double angle = 1.234;
  ProjectionPlane rotated = plane;
  rotated.basis_u = plane.basis_u * std::cos(angle) + plane.basis_v * std::sin(angle);
  rotated.basis_v = plane.basis_v * std::cos(angle) - plane.basis_u * std::sin(angle);
  for (int i = 0; i < 100; ++i) {
    Vec3 a{rng.normal(), rng.normal(), rng.normal()};
    Vec3 b{rng.normal(), rng.normal(), rng.normal()};
    auto pa = project(a, plane), pb = project(b, plane);
    auto qa = project(a, rotated), qb = project(b, rotated);
    double d1 = std::hypot(pa.u - pb.u, pa.v - pb.v);
    double d2 = std::hypot(qa.u - qb.u, qa.v - qb.v);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-10));
  }
}
