#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rggcross::stats {

/// Empirical distribution of nonnegative integer counts. Merge is
/// commutative and associative, so parallel replications reduce
/// deterministically.
class EmpiricalPmf {
 public:
  void add(long long k, long long weight = 1);
  void merge(const EmpiricalPmf& other);

  long long total() const { return total_; }
  double prob(long long k) const;
  long long max_value() const;
  const std::map<long long, long long>& counts() const { return counts_; }

 private:
  std::map<long long, long long> counts_;
  long long total_ = 0;
};

/// Truncation point for Poisson tail sums: ceil(mean + 12*sqrt(mean+1) + 30).
long long poisson_tail_cutoff(double mean);

double poisson_pmf(long long k, double mean);

/// Total variation distance between the empirical law and Poisson(mean),
/// with the analytic Poisson tail beyond the cutoff added.
double tv_distance_to_poisson(const EmpiricalPmf& pmf, double mean);

/// Wasserstein-1 distance on counts: sum over k of |F_hat(k) - F_Poi(k)|.
double wasserstein1_counts(const EmpiricalPmf& pmf, double mean);

/// Sample mean with a 3-standard-error halfwidth. Requires n >= 2.
std::pair<double, double> mean_ci(std::span<const double> samples);

/// Sample covariance of paired observations with a jackknife 3-SE
/// halfwidth. Requires n >= 2.
std::pair<double, double> covariance_ci(std::span<const double> xs,
                                        std::span<const double> ys);

double sample_variance(std::span<const double> xs);

}  // namespace rggcross::stats
