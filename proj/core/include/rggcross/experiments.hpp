#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rggcross/crossings.hpp"
#include "rggcross/stats.hpp"
#include "rggcross/theory.hpp"

namespace rggcross::experiments {

/// Seeded Monte Carlo experiment parameters. Every suite is a pure
/// function of this struct; the worker count never changes results.
struct ExperimentConfig {
  double t = 1000.0;
  theory::RegimeSpec regime = theory::RegimeSpec::constant(1.0);
  long long replications = 1000;
  std::uint64_t master_seed = 1;
  std::optional<geometry::SpherePoint> plane;   // single-plane normal
  std::optional<double> separation;             // radians (two-plane)
  std::optional<int> grid_resolution;           // existence scan
  std::optional<int> max_planes;                // find-plane cap
  std::optional<geometry::Region2> region;
  int jobs = 1;
  bool unsafe = false;            // overrides the sparse-regime guard
  bool two_plane_control = false; // independent graphs per plane
  std::optional<double> radius_override;  // honored only with unsafe

  double radius() const;
};

/// Throws std::invalid_argument on bad configs; in particular rejects
/// t * r^3 >= 0.1 (outside the sparse regime) unless unsafe is set.
void validate(const ExperimentConfig& config);

struct ReplicationRecord {
  long long replication_index = 0;
  std::uint64_t seed = 0;  // derived stream seed, for audit
  long long n_vertices = 0;
  long long n_edges = 0;
  std::vector<long long> counts;  // crossing counts, one per plane
  long long first_success_index = 0;  // find-plane; 0 when censored
  bool censored = false;
  long long n_zero_planes = 0;  // existence scan
  long long degenerate_hits = 0;
};

struct DistributionResult {
  ExperimentConfig config;
  double radius = 0.0;
  double M_theory = 0.0;
  std::vector<ReplicationRecord> records;
  stats::EmpiricalPmf pmf;
  double mean = 0.0;
  double mean_halfwidth = 0.0;
  double tv = 0.0;
  double w1 = 0.0;
  long long degenerate_hits = 0;
};

struct TwoPlaneResult {
  ExperimentConfig config;
  double radius = 0.0;
  double M_theory = 0.0;
  double separation = 0.0;
  std::vector<ReplicationRecord> records;
  double mean_x = 0.0, mean_y = 0.0;
  double var_x = 0.0, var_y = 0.0;
  double cov = 0.0, cov_halfwidth = 0.0;
  std::vector<theory::BoundTerm> diagnostics;
};

struct FindPlaneResult {
  ExperimentConfig config;
  double radius = 0.0;
  double M_theory = 0.0;
  std::vector<ReplicationRecord> records;
  std::vector<double> empirical_cdf;  // index k-1 holds P(first <= k)
  std::vector<double> theory_cdf;
  long long censored_count = 0;
};

struct ExistenceResult {
  ExperimentConfig config;
  double radius = 0.0;
  double log_exponent = 0.0;  // c = (1/8) c' c_d f_full
  std::string warning;        // set when c >= 1/8
  std::vector<ReplicationRecord> records;
  double existence_fraction = 0.0;  // reps with >= 1 zero-crossing plane
  double measure_proxy = 0.0;       // mean fraction of zero-crossing planes
};

/// Single-plane crossing-count law vs Poisson(M).
DistributionResult run_distribution(const ExperimentConfig& config);

/// Covariance of counts on two planes at a fixed normal separation,
/// from the same graph realization per replication.
TwoPlaneResult run_two_plane(const ExperimentConfig& config);

/// First success index over uniformly random planes, censored at
/// max_planes, vs the 1-(1-e^-M)^m law.
FindPlaneResult run_find_plane(const ExperimentConfig& config);

/// Zero-crossing plane search over an equal-area grid on the positive
/// octant. The grid fraction is a lower-bound proxy for the spherical
/// measure of crossing-free directions, not that measure itself.
ExistenceResult run_existence_scan(const ExperimentConfig& config);

/// Deterministic plane pair at a given normal separation: the first
/// normal at (1,1,1)/sqrt(3), the second a geodesic step toward a fixed
/// tangent direction.
std::pair<geometry::SpherePoint, geometry::SpherePoint> plane_pair(
    double separation);

/// Flat key-value config file ("key = value" lines, '#' comments).
/// Unknown keys are rejected.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

geometry::Region2 parse_region(const std::string& text);

}  // namespace rggcross::experiments
