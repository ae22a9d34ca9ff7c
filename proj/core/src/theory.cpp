#include "rggcross/theory.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace rggcross::theory {

using geometry::BallWindow;
using geometry::Region2;

double beta_function(double a, double b) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("beta_function: arguments must be positive");
  }
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double c_d_constant() { return 8192.0 * M_PI / 11025.0; }

double c_d_via_beta() {
  const double kappa1 = 2.0;
  const double B = beta_function(3.0, 1.5);
  return 8.0 * M_PI * kappa1 * kappa1 * B * B;
}

double f_full_plane(const BallWindow& window) {
  double R = window.radius;
  return 2.0 * M_PI * R * R * R * R;
}

ModelConstants model_constants() {
  ModelConstants mc;
  mc.R = BallWindow::unit_volume().radius;
  mc.kappa1 = 2.0;
  mc.beta_3_32 = beta_function(3.0, 1.5);
  mc.c_d = c_d_constant();
  mc.f_full = f_full_plane(BallWindow::unit_volume());
  return mc;
}

namespace {

// Recursive adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Inner integral of the squared chord 4*(R^2 - u^2 - v^2) over v in [a, b].
double inner_chord2(double R2u, double a, double b) {
  if (b <= a) return 0.0;
  return 4.0 * (R2u * (b - a) - (b * b * b - a * a * a) / 3.0);
}

}  // namespace

double f_region(const BallWindow& window, const geometry::ProjectionPlane& /*plane*/,
                const Region2& region) {
  const double R = window.radius;
  const double tol = 1e-11;

  auto disk_section = [R](double u) {
    double s2 = R * R - u * u;
    return s2 > 0.0 ? std::sqrt(s2) : 0.0;
  };

  switch (region.kind) {
    case Region2::Kind::FullPlane: {
      auto f = [&](double u) {
        double s = disk_section(u);
        return inner_chord2(R * R - u * u, -s, s);
      };
      return integrate(f, -R, R, tol);
    }
    case Region2::Kind::Rect: {
      double u0 = std::max(region.u_min, -R), u1 = std::min(region.u_max, R);
      auto f = [&](double u) {
        double s = disk_section(u);
        double a = std::max(region.v_min, -s), b = std::min(region.v_max, s);
        return inner_chord2(R * R - u * u, a, b);
      };
      return integrate(f, u0, u1, tol);
    }
    case Region2::Kind::Disk: {
      double u0 = std::max(region.center.u - region.disk_radius, -R);
      double u1 = std::min(region.center.u + region.disk_radius, R);
      auto f = [&](double u) {
        double s = disk_section(u);
        double du = u - region.center.u;
        double q2 = region.disk_radius * region.disk_radius - du * du;
        if (q2 <= 0.0) return 0.0;
        double q = std::sqrt(q2);
        double a = std::max(region.center.v - q, -s);
        double b = std::min(region.center.v + q, s);
        return inner_chord2(R * R - u * u, a, b);
      };
      return integrate(f, u0, u1, tol);
    }
  }
  throw std::invalid_argument("f_region: unsupported region kind");
}

double expected_crossings(double t, double r, const BallWindow& window,
                          const std::optional<Region2>& region) {
  if (t < 0.0 || r < 0.0) {
    throw std::invalid_argument("expected_crossings: negative parameter");
  }
  double f = region ? f_region(window, geometry::plane_from_sphere_point(
                                           geometry::SpherePoint(0.0, 0.0, 1.0)),
                               *region)
                    : f_full_plane(window);
  double r4 = r * r * r * r;
  return 0.125 * c_d_constant() * t * t * t * t * r4 * r4 * f;
}

RegimeSpec RegimeSpec::constant(double c) {
  if (c <= 0.0) throw std::invalid_argument("RegimeSpec: parameter must be positive");
  return RegimeSpec{Kind::Constant, c};
}

RegimeSpec RegimeSpec::log(double c_prime) {
  if (c_prime <= 0.0) {
    throw std::invalid_argument("RegimeSpec: parameter must be positive");
  }
  return RegimeSpec{Kind::Log, c_prime};
}

double RegimeSpec::log_exponent() const {
  if (kind != Kind::Log) {
    throw std::logic_error("log_exponent: only defined for the log regime");
  }
  return 0.125 * parameter * c_d_constant() *
         f_full_plane(geometry::BallWindow::unit_volume());
}

double radius_for_regime(double t, const RegimeSpec& spec) {
  switch (spec.kind) {
    case RegimeSpec::Kind::Constant:
      return std::pow(spec.parameter / (t * t), 0.25);
    case RegimeSpec::Kind::Log: {
      if (t <= 1.0) {
        throw std::invalid_argument("radius_for_regime: log regime needs t > 1");
      }
      return std::pow(spec.parameter * std::log(t) / (t * t * t * t), 0.125);
    }
  }
  throw std::logic_error("radius_for_regime: bad kind");
}

double geometric_cdf(long long m, double M) {
  if (m < 0 || M < 0.0) {
    throw std::invalid_argument("geometric_cdf: negative argument");
  }
  return 1.0 - std::pow(1.0 - std::exp(-M), static_cast<double>(m));
}

std::vector<BoundTerm> bound_terms(double t, double r, double alpha) {
  if (t <= 0.0 || r <= 0.0) {
    throw std::invalid_argument("bound_terms: positive inputs required");
  }
  auto p = [](double x, double e) { return std::pow(x, e); };
  return {
      // Variance orders (d = 3): t^7 r^(4d+4), t^6 r^(3d+4), t^6 r^(4d+2),
      // t^5 r^(3d+2).
      {"var:t^7*r^16", p(t, 7.0) * p(r, 16.0)},
      {"var:t^6*r^13", p(t, 6.0) * p(r, 13.0)},
      {"var:t^6*r^14", p(t, 6.0) * p(r, 14.0)},
      {"var:t^5*r^11", p(t, 5.0) * p(r, 11.0)},
      // Covariance orders: t^6 r^(3d+4) and t^(4+alpha*d) r^(3d).
      {"cov:t^6*r^13", p(t, 6.0) * p(r, 13.0)},
      {"cov:t^(4+3a)*r^9", p(t, 4.0 + 3.0 * alpha) * p(r, 9.0)},
  };
}

double two_cylinder_height(double r, double angle) {
  if (angle <= 0.0 || angle > M_PI) {
    throw std::invalid_argument("two_cylinder_height: angle must be in (0, pi]");
  }
  return 2.0 * r / std::sin(0.5 * angle);
}

}  // namespace rggcross::theory
