#include "rggcross/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rggcross::results_io {

using experiments::ExperimentConfig;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json config_echo(const ExperimentConfig& c) {
  json j;
  j["t"] = c.t;
  if (c.regime.kind == theory::RegimeSpec::Kind::Constant) {
    j["c_const"] = c.regime.parameter;
  } else {
    j["c_log"] = c.regime.parameter;
  }
  j["replications"] = c.replications;
  j["master_seed"] = c.master_seed;
  j["jobs"] = c.jobs;
  if (c.plane) {
    j["plane"] = {c.plane->x(), c.plane->y(), c.plane->z()};
  }
  if (c.separation) j["separation"] = *c.separation;
  if (c.grid_resolution) j["grid_resolution"] = *c.grid_resolution;
  if (c.max_planes) j["max_planes"] = *c.max_planes;
  if (c.region) {
    switch (c.region->kind) {
      case geometry::Region2::Kind::FullPlane:
        j["region"] = "full";
        break;
      case geometry::Region2::Kind::Disk:
        j["region"] = {{"disk",
                        {c.region->center.u, c.region->center.v,
                         c.region->disk_radius}}};
        break;
      case geometry::Region2::Kind::Rect:
        j["region"] = {{"rect",
                        {c.region->u_min, c.region->v_min, c.region->u_max,
                         c.region->v_max}}};
        break;
    }
  }
  if (c.unsafe) j["unsafe"] = true;
  if (c.two_plane_control) j["control"] = true;
  if (c.radius_override) j["radius"] = *c.radius_override;
  return j;
}

}  // namespace

std::string records_csv(const experiments::DistributionResult& res) {
  std::string out = "rep,seed,n_vertices,n_edges,n_crossings\n";
  char buf[160];
  for (const auto& r : res.records) {
    std::snprintf(buf, sizeof(buf), "%lld,%llu,%lld,%lld,%lld\n",
                  r.replication_index, (unsigned long long)r.seed, r.n_vertices,
                  r.n_edges, r.counts[0]);
    out += buf;
  }
  return out;
}

std::string records_csv(const experiments::TwoPlaneResult& res) {
  std::string out = "rep,seed,n_vertices,n_edges,count_x,count_y\n";
  char buf[192];
  for (const auto& r : res.records) {
    std::snprintf(buf, sizeof(buf), "%lld,%llu,%lld,%lld,%lld,%lld\n",
                  r.replication_index, (unsigned long long)r.seed, r.n_vertices,
                  r.n_edges, r.counts[0], r.counts[1]);
    out += buf;
  }
  return out;
}

std::string records_csv(const experiments::FindPlaneResult& res) {
  std::string out = "rep,seed,n_vertices,n_edges,first_success,censored\n";
  char buf[192];
  for (const auto& r : res.records) {
    std::snprintf(buf, sizeof(buf), "%lld,%llu,%lld,%lld,%lld,%d\n",
                  r.replication_index, (unsigned long long)r.seed, r.n_vertices,
                  r.n_edges, r.first_success_index, r.censored ? 1 : 0);
    out += buf;
  }
  return out;
}

std::string records_csv(const experiments::ExistenceResult& res) {
  std::string out = "rep,seed,n_vertices,n_edges,n_zero_planes,zero_fraction\n";
  char buf[224];
  const double g2 = static_cast<double>(*res.config.grid_resolution) *
                    static_cast<double>(*res.config.grid_resolution);
  for (const auto& r : res.records) {
    std::snprintf(buf, sizeof(buf), "%lld,%llu,%lld,%lld,%lld,%s\n",
                  r.replication_index, (unsigned long long)r.seed, r.n_vertices,
                  r.n_edges, r.n_zero_planes,
                  fmt(static_cast<double>(r.n_zero_planes) / g2).c_str());
    out += buf;
  }
  return out;
}

std::string summary_json(const experiments::DistributionResult& res) {
  json j;
  j["suite"] = "distribution";
  j["config_echo"] = config_echo(res.config);
  j["radius"] = res.radius;
  j["M_theory"] = res.M_theory;
  j["estimates"] = {{"mean", res.mean},
                    {"degenerate_hits", res.degenerate_hits}};
  j["ci_halfwidths"] = {{"mean", res.mean_halfwidth}};
  j["distances"] = {{"tv", res.tv}, {"w1", res.w1}};
  json pmf = json::object();
  for (const auto& [k, c] : res.pmf.counts()) {
    pmf[std::to_string(k)] = c;
  }
  j["pmf"] = pmf;
  return j.dump(2);
}

std::string summary_json(const experiments::TwoPlaneResult& res) {
  json j;
  j["suite"] = "two-plane";
  j["config_echo"] = config_echo(res.config);
  j["radius"] = res.radius;
  j["M_theory"] = res.M_theory;
  j["estimates"] = {{"mean_x", res.mean_x}, {"mean_y", res.mean_y},
                    {"var_x", res.var_x},   {"var_y", res.var_y},
                    {"cov", res.cov}};
  j["ci_halfwidths"] = {{"cov", res.cov_halfwidth}};
  j["distances"] = json::object();
  json diag = json::object();
  for (const auto& term : res.diagnostics) diag[term.name] = term.value;
  j["diagnostics"] = diag;
  return j.dump(2);
}

std::string summary_json(const experiments::FindPlaneResult& res) {
  json j;
  j["suite"] = "find-plane";
  j["config_echo"] = config_echo(res.config);
  j["radius"] = res.radius;
  j["M_theory"] = res.M_theory;
  j["estimates"] = {{"empirical_cdf", res.empirical_cdf},
                    {"theory_cdf", res.theory_cdf},
                    {"censored", res.censored_count}};
  j["ci_halfwidths"] = json::object();
  j["distances"] = json::object();
  return j.dump(2);
}

std::string summary_json(const experiments::ExistenceResult& res) {
  json j;
  j["suite"] = "existence-scan";
  j["config_echo"] = config_echo(res.config);
  j["radius"] = res.radius;
  j["M_theory"] = nullptr;
  j["log_exponent"] = res.log_exponent;
  if (!res.warning.empty()) j["warning"] = res.warning;
  j["estimates"] = {{"existence_fraction", res.existence_fraction},
                    {"measure_proxy", res.measure_proxy}};
  j["ci_halfwidths"] = json::object();
  j["distances"] = json::object();
  return j.dump(2);
}

std::string theory_text(double t, const theory::RegimeSpec& regime) {
  auto mc = theory::model_constants();
  double r = theory::radius_for_regime(t, regime);
  double M = theory::expected_crossings(t, r, geometry::BallWindow::unit_volume());
  std::ostringstream out;
  out.precision(12);
  out << "R          " << mc.R << "\n"
      << "kappa_1    " << mc.kappa1 << "\n"
      << "B(3,3/2)   " << mc.beta_3_32 << "\n"
      << "c_d        " << mc.c_d << "\n"
      << "f_full     " << mc.f_full << "\n"
      << "t          " << t << "\n"
      << "r_t        " << r << "\n"
      << "M          " << M << "\n"
      << "exp(-M)    " << std::exp(-M) << "\n";
  if (regime.kind == theory::RegimeSpec::Kind::Log) {
    out << "log_exp_c  " << regime.log_exponent() << "\n";
  }
  return out.str();
}

std::string theory_json(double t, const theory::RegimeSpec& regime) {
  auto mc = theory::model_constants();
  double r = theory::radius_for_regime(t, regime);
  double M = theory::expected_crossings(t, r, geometry::BallWindow::unit_volume());
  json j;
  j["R"] = mc.R;
  j["kappa1"] = mc.kappa1;
  j["beta_3_32"] = mc.beta_3_32;
  j["c_d"] = mc.c_d;
  j["f_full"] = mc.f_full;
  j["t"] = t;
  j["r_t"] = r;
  j["M"] = M;
  j["exp_minus_M"] = std::exp(-M);
  if (regime.kind == theory::RegimeSpec::Kind::Log) {
    j["log_exponent"] = regime.log_exponent();
  }
  return j.dump(2);
}

}  // namespace rggcross::results_io
