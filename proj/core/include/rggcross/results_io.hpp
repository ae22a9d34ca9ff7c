#pragma once

#include <string>

#include "rggcross/experiments.hpp"

namespace rggcross::results_io {

/// Per-replication CSV records, one line per replication, headers:
///   distribution:  rep,seed,n_vertices,n_edges,n_crossings
///   two-plane:     rep,seed,n_vertices,n_edges,count_x,count_y
///   find-plane:    rep,seed,n_vertices,n_edges,first_success,censored
///   existence:     rep,seed,n_vertices,n_edges,n_zero_planes,zero_fraction
std::string records_csv(const experiments::DistributionResult& res);
std::string records_csv(const experiments::TwoPlaneResult& res);
std::string records_csv(const experiments::FindPlaneResult& res);
std::string records_csv(const experiments::ExistenceResult& res);

/// Summary JSON: {suite, config_echo, M_theory, estimates,
/// ci_halfwidths, distances}.
std::string summary_json(const experiments::DistributionResult& res);
std::string summary_json(const experiments::TwoPlaneResult& res);
std::string summary_json(const experiments::FindPlaneResult& res);
std::string summary_json(const experiments::ExistenceResult& res);

/// Theory constants table for the given regime at intensity t.
std::string theory_text(double t, const theory::RegimeSpec& regime);
std::string theory_json(double t, const theory::RegimeSpec& regime);

}  // namespace rggcross::results_io
