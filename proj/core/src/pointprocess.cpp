#include "rggcross/pointprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace rggcross {

double RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

namespace {

// log(k!) for the PTRS acceptance test.
double log_factorial(long long k) {
  static const double small[] = {0.0,
                                 0.0,
                                 0.6931471805599453,
                                 1.791759469228055,
                                 3.1780538303479458,
                                 4.787491742782046,
                                 6.579251212010101,
                                 8.525161361065415,
                                 10.60460290274525,
                                 12.801827480081469};
  if (k < 10) return small[k];
  return std::lgamma(static_cast<double>(k) + 1.0);
}

}  // namespace

long long RngStream::poisson(double mean) {
  if (mean < 0.0) {
    throw std::invalid_argument("poisson: negative mean");
  }
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    // Inversion by sequential search.
    double p = std::exp(-mean);
    double cdf = p;
    double u = uniform();
    long long k = 0;
    while (u > cdf) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
      if (p < 1e-300 && k > mean) break;
    }
    return k;
  }
  // Hormann's PTRS transformed rejection, exact for mean >= 10.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) {
      return static_cast<long long>(k);
    }
    if (k < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    double rhs = k * log_mean - mean - log_factorial(static_cast<long long>(k));
    if (lhs <= rhs) {
      return static_cast<long long>(k);
    }
  }
}

namespace pointprocess {

using geometry::Vec3;

Vec3 sample_ball_uniform(RngStream& rng, const geometry::BallWindow& window) {
  // Inverse-CDF radius R*U^(1/3) with a uniform direction.
  Vec3 dir = geometry::sample_sphere_uniform(rng);
  double r = window.radius * std::cbrt(rng.uniform());
  return dir * r;
}

PointCloud sample_poisson_ball(double t, const geometry::BallWindow& window,
                               RngStream& rng) {
  if (t < 0.0) {
    throw std::invalid_argument("sample_poisson_ball: negative intensity");
  }
  PointCloud cloud;
  cloud.intensity = t;
  cloud.window = window;
  long long n = rng.poisson(t * window.volume());
  cloud.points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    cloud.points.push_back(sample_ball_uniform(rng, window));
  }
  return cloud;
}

}  // namespace pointprocess
}  // namespace rggcross
