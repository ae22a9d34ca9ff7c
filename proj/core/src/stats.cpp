#include "rggcross/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rggcross::stats {

void EmpiricalPmf::add(long long k, long long weight) {
  if (k < 0) throw std::invalid_argument("EmpiricalPmf: negative count value");
  counts_[k] += weight;
  total_ += weight;
}

void EmpiricalPmf::merge(const EmpiricalPmf& other) {
  for (const auto& [k, c] : other.counts_) {
    counts_[k] += c;
  }
  total_ += other.total_;
}

double EmpiricalPmf::prob(long long k) const {
  if (total_ == 0) return 0.0;
  auto it = counts_.find(k);
  return it == counts_.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(total_);
}

long long EmpiricalPmf::max_value() const {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

long long poisson_tail_cutoff(double mean) {
  return static_cast<long long>(
      std::ceil(mean + 12.0 * std::sqrt(mean + 1.0) + 30.0));
}

double poisson_pmf(long long k, double mean) {
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(mean) - mean -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

double tv_distance_to_poisson(const EmpiricalPmf& pmf, double mean) {
  if (mean < 0.0) throw std::invalid_argument("tv_distance: negative mean");
  const long long k_max = poisson_tail_cutoff(mean);
  double sum = 0.0;
  double poi_mass = 0.0;
  double emp_mass = 0.0;
  for (long long k = 0; k <= k_max; ++k) {
    double q = poisson_pmf(k, mean);
    double p = pmf.prob(k);
    sum += std::abs(p - q);
    poi_mass += q;
    emp_mass += p;
  }
  // Both tails beyond the cutoff contribute at most their full mass.
  double poi_tail = std::max(0.0, 1.0 - poi_mass);
  double emp_tail = std::max(0.0, 1.0 - emp_mass);
  return 0.5 * (sum + poi_tail + emp_tail);
}

double wasserstein1_counts(const EmpiricalPmf& pmf, double mean) {
  if (mean < 0.0) throw std::invalid_argument("wasserstein1: negative mean");
  const long long k_max =
      std::max(poisson_tail_cutoff(mean), pmf.max_value());
  double sum = 0.0;
  double F_emp = 0.0, F_poi = 0.0;
  double poi_survival_sum = 0.0;  // sum over k <= k_max of (1 - F_poi(k))
  for (long long k = 0; k <= k_max; ++k) {
    F_emp += pmf.prob(k);
    F_poi += poisson_pmf(k, mean);
    sum += std::abs(F_emp - F_poi);
    poi_survival_sum += std::max(0.0, 1.0 - F_poi);
  }
  // Beyond the cutoff the empirical CDF is one; the Poisson remainder is
  // sum_{k > k_max} (1 - F(k)) = mean - sum_{k <= k_max} (1 - F(k)).
  sum += std::max(0.0, mean - poi_survival_sum);
  return sum;
}

std::pair<double, double> mean_ci(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("mean_ci: need at least two samples");
  double sum = 0.0;
  for (double x : samples) sum += x;
  double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  double var = ss / static_cast<double>(n - 1);
  double se = std::sqrt(var / static_cast<double>(n));
  return {mean, 3.0 * se};
}

double sample_variance(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) throw std::invalid_argument("sample_variance: need n >= 2");
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(n - 1);
}

std::pair<double, double> covariance_ci(std::span<const double> xs,
                                        std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n < 2) {
    throw std::invalid_argument("covariance_ci: need paired samples, n >= 2");
  }
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxy += xs[i] * ys[i];
  }
  const double nd = static_cast<double>(n);
  // Two-pass form: bitwise-identical to sample_variance when xs == ys.
  double mx = sx / nd, my = sy / nd;
  double cross = 0.0;
  for (std::size_t i = 0; i < n; ++i) cross += (xs[i] - mx) * (ys[i] - my);
  double cov = cross / (nd - 1.0);
  if (n == 2) {
    return {cov, std::numeric_limits<double>::infinity()};
  }
  // Jackknife over leave-one-out covariances.
  double mean_loo = 0.0;
  std::vector<double> loo(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sxi = sx - xs[i], syi = sy - ys[i], sxyi = sxy - xs[i] * ys[i];
    double m = nd - 1.0;
    loo[i] = (sxyi - sxi * syi / m) / (m - 1.0);
    mean_loo += loo[i];
  }
  mean_loo /= nd;
  double ss = 0.0;
  for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
  double se = std::sqrt((nd - 1.0) / nd * ss);
  return {cov, 3.0 * se};
}

}  // namespace rggcross::stats
