// Command-line front end: theory constant tables, the four Monte Carlo
// suites, and a quick selftest of the counting kernels.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rggcross/experiments.hpp"
#include "rggcross/results_io.hpp"
#include "rggcross/testing/oracles.hpp"

namespace {

using namespace rggcross;

constexpr int kExitConfigError = 2;
constexpr int kExitSelftestFailure = 3;

struct CliOptions {
  std::optional<double> t;
  std::optional<double> c_const;
  std::optional<double> c_log;
  std::optional<long long> reps;
  std::optional<std::uint64_t> seed;
  std::string plane;
  std::optional<double> sep;
  int grid = 0;
  int max_planes = 0;
  std::string region;
  std::string out;
  std::string format = "text";
  std::optional<int> jobs;
  bool unsafe = false;
  bool control = false;
  std::optional<double> radius;
  std::string config_path;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--t", opt.t, "Poisson intensity t");
  auto* cc = cmd->add_option("--c-const", opt.c_const,
                             "constant regime: t^2 r^4 = c");
  auto* cl = cmd->add_option("--c-log", opt.c_log,
                             "log regime: r = (c' log t / t^4)^(1/8)");
  cc->excludes(cl);
  cl->excludes(cc);
  cmd->add_option("--reps", opt.reps, "number of replications");
  cmd->add_option("--seed", opt.seed, "master seed");
  cmd->add_option("--plane", opt.plane, "plane normal x,y,z (normalized)");
  cmd->add_option("--sep", opt.sep, "normal separation in radians");
  cmd->add_option("--grid", opt.grid, "existence-scan grid resolution");
  cmd->add_option("--max-planes", opt.max_planes, "find-plane cap m");
  cmd->add_option("--region", opt.region, "region disk:r | rect:u0,v0,u1,v1");
  cmd->add_option("--out", opt.out, "output path prefix (.csv/.json appended)");
  cmd->add_option("--format", opt.format, "stdout format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--jobs", opt.jobs, "worker threads (never changes results)");
  cmd->add_flag("--unsafe", opt.unsafe, "override regime guards");
  cmd->add_flag("--control", opt.control,
                "two-plane: independent graphs per plane");
  cmd->add_option("--radius", opt.radius,
                  "raw connection radius (requires --unsafe)");
  cmd->add_option("--config", opt.config_path, "key=value config file");
}

experiments::ExperimentConfig build_config(const CliOptions& opt) {
  experiments::ExperimentConfig config;
  if (!opt.config_path.empty()) {
    config = experiments::parse_config_file(opt.config_path);
  }
  if (opt.t) config.t = *opt.t;
  if (opt.c_const) config.regime = theory::RegimeSpec::constant(*opt.c_const);
  if (opt.c_log) config.regime = theory::RegimeSpec::log(*opt.c_log);
  if (opt.reps) config.replications = *opt.reps;
  if (opt.seed) config.master_seed = *opt.seed;
  if (opt.jobs) config.jobs = *opt.jobs;
  if (opt.unsafe) config.unsafe = true;
  if (opt.control) config.two_plane_control = true;
  if (opt.radius) {
    config.radius_override = *opt.radius;
  }
  if (!opt.plane.empty()) {
    std::stringstream ss(opt.plane);
    std::string c;
    std::vector<double> xyz;
    while (std::getline(ss, c, ',')) xyz.push_back(std::stod(c));
    if (xyz.size() != 3) {
      throw std::invalid_argument("--plane needs x,y,z");
    }
    config.plane = geometry::SpherePoint(
        geometry::Vec3{xyz[0], xyz[1], xyz[2]}.normalized());
  }
  if (opt.sep) config.separation = *opt.sep;
  if (opt.grid > 0) config.grid_resolution = opt.grid;
  if (opt.max_planes > 0) config.max_planes = opt.max_planes;
  if (!opt.region.empty()) config.region = experiments::parse_region(opt.region);
  if (config.regime.kind == theory::RegimeSpec::Kind::Log &&
      config.regime.log_exponent() >= 0.125) {
    std::cerr << "warning: implied log exponent c = "
              << config.regime.log_exponent()
              << " >= 1/8, outside the proven existence regime\n";
  }
  return config;
}

int write_outputs(const std::string& out, const std::string& csv,
                  const std::string& json, const std::string& format) {
  if (!out.empty()) {
    for (const auto& [suffix, payload] :
         {std::pair{std::string(".csv"), csv}, {std::string(".json"), json}}) {
      std::string path = out + suffix;
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitConfigError;
      }
      file << payload;
      if (!file) {
        std::cerr << "error: write failed for '" << path << "'\n";
        return kExitConfigError;
      }
    }
  }
  if (format == "csv") {
    std::cout << csv;
  } else if (format == "json") {
    std::cout << json << "\n";
  }
  return 0;
}

int run_theory(const CliOptions& opt) {
  theory::RegimeSpec regime = theory::RegimeSpec::constant(1.0);
  if (opt.c_log) regime = theory::RegimeSpec::log(*opt.c_log);
  if (opt.c_const) regime = theory::RegimeSpec::constant(*opt.c_const);
  double t = opt.t.value_or(1000.0);
  std::string text = results_io::theory_text(t, regime);
  std::string json = results_io::theory_json(t, regime);
  if (!opt.out.empty()) {
    std::ofstream file(opt.out + ".json", std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file '" << opt.out << ".json'\n";
      return kExitConfigError;
    }
    file << json << "\n";
  }
  std::cout << (opt.format == "json" ? json + "\n" : text);
  return 0;
}

int run_distribution_cmd(const CliOptions& opt) {
  auto res = experiments::run_distribution(build_config(opt));
  if (opt.format == "text") {
    std::printf("distribution: t=%g r=%g reps=%lld\n", res.config.t, res.radius,
                res.config.replications);
    std::printf("  M_theory   %.6f\n", res.M_theory);
    std::printf("  mean       %.6f +- %.6f (3 SE)\n", res.mean, res.mean_halfwidth);
    std::printf("  tv         %.6f\n  w1         %.6f\n", res.tv, res.w1);
  }
  return write_outputs(opt.out, results_io::records_csv(res),
                       results_io::summary_json(res), opt.format);
}

int run_two_plane_cmd(const CliOptions& opt) {
  auto res = experiments::run_two_plane(build_config(opt));
  if (opt.format == "text") {
    std::printf("two-plane: t=%g r=%g sep=%g reps=%lld\n", res.config.t,
                res.radius, res.separation, res.config.replications);
    std::printf("  mean_x %.6f mean_y %.6f\n", res.mean_x, res.mean_y);
    std::printf("  var_x  %.6f var_y  %.6f\n", res.var_x, res.var_y);
    std::printf("  cov    %.6f +- %.6f (jackknife 3 SE)\n", res.cov,
                res.cov_halfwidth);
  }
  return write_outputs(opt.out, results_io::records_csv(res),
                       results_io::summary_json(res), opt.format);
}

int run_find_plane_cmd(const CliOptions& opt) {
  auto res = experiments::run_find_plane(build_config(opt));
  if (opt.format == "text") {
    std::printf("find-plane: t=%g r=%g m=%d reps=%lld censored=%lld\n",
                res.config.t, res.radius, *res.config.max_planes,
                res.config.replications, res.censored_count);
    std::printf("  M_theory %.6f  P(first<=1) theory %.6f\n", res.M_theory,
                std::exp(-res.M_theory));
    for (std::size_t k = 0; k < res.empirical_cdf.size(); ++k) {
      std::printf("  m=%zu  empirical %.6f  theory %.6f\n", k + 1,
                  res.empirical_cdf[k], res.theory_cdf[k]);
    }
  }
  return write_outputs(opt.out, results_io::records_csv(res),
                       results_io::summary_json(res), opt.format);
}

int run_existence_cmd(const CliOptions& opt) {
  auto res = experiments::run_existence_scan(build_config(opt));
  if (!res.warning.empty()) {
    std::cerr << "warning: " << res.warning << "\n";
  }
  if (opt.format == "text") {
    std::printf("existence-scan: t=%g r=%g grid=%d reps=%lld\n", res.config.t,
                res.radius, *res.config.grid_resolution, res.config.replications);
    std::printf("  log exponent c     %.6f\n", res.log_exponent);
    std::printf("  existence fraction %.6f\n", res.existence_fraction);
    std::printf("  measure proxy      %.6f\n", res.measure_proxy);
  }
  return write_outputs(opt.out, results_io::records_csv(res),
                       results_io::summary_json(res), opt.format);
}

bool check(bool ok, const char* what, int& failures) {
  std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", what);
  if (!ok) ++failures;
  return ok;
}

int run_selftest() {
  int failures = 0;
  std::puts("selftest:");

  auto mc = theory::model_constants();
  check(std::abs(theory::c_d_via_beta() - theory::c_d_constant()) < 1e-12,
        "c_d two-path agreement", failures);
  check(std::abs(mc.beta_3_32 - 16.0 / 105.0) < 1e-14, "B(3,3/2) = 16/105",
        failures);
  auto window = geometry::BallWindow::unit_volume();
  check(std::abs(theory::f_region(window,
                                  geometry::plane_from_sphere_point(
                                      geometry::SpherePoint(0, 0, 1)),
                                  geometry::Region2::full_plane()) -
                 mc.f_full) < 1e-9,
        "f quadrature vs closed form", failures);

  // Kernel equivalence on random sparse instances.
  bool kernels_equal = true;
  for (int i = 0; i < 50 && kernels_equal; ++i) {
    RngStream rng = RngStream::derive(424242, static_cast<std::uint64_t>(i));
    double t = 300.0;
    double r = theory::radius_for_regime(t, theory::RegimeSpec::constant(1.5));
    auto graph = rgg::build_edges_grid(
        pointprocess::sample_poisson_ball(t, window, rng), r);
    auto plane = geometry::plane_from_sphere_point(geometry::sample_sphere_pp(rng));
    auto a = crossings::count_crossings_grid(graph, plane);
    auto b = crossings::count_crossings_bruteforce(graph, plane);
    kernels_equal = a.count() == b.count();
  }
  check(kernels_equal, "grid kernel equals brute force (50 instances)", failures);

  // Ordered-tuple prefactor on small dense instances.
  bool tuples_ok = true;
  for (int i = 0; i < 5 && tuples_ok; ++i) {
    RngStream rng = RngStream::derive(171717, static_cast<std::uint64_t>(i));
    auto cloud = pointprocess::sample_poisson_ball(40.0, window, rng);
    auto graph = rgg::build_edges_grid(std::move(cloud), 0.3);
    auto plane = geometry::plane_from_sphere_point(geometry::sample_sphere_pp(rng));
    long long unordered = crossings::count_crossings_bruteforce(graph, plane).count();
    tuples_ok = 8 * unordered == testing::ordered_tuple_crossing_count(graph, plane);
  }
  check(tuples_ok, "8x unordered equals ordered-tuple oracle (5 instances)",
        failures);

  // Determinism across worker counts.
  experiments::ExperimentConfig config;
  config.t = 200.0;
  config.regime = theory::RegimeSpec::constant(1.0);
  config.replications = 200;
  config.master_seed = 99;
  auto res1 = experiments::run_distribution(config);
  config.jobs = 2;
  auto res2 = experiments::run_distribution(config);
  config.jobs = 1;
  auto res3 = experiments::run_distribution(config);
  check(results_io::records_csv(res1) == results_io::records_csv(res2) &&
            results_io::records_csv(res1) == results_io::records_csv(res3),
        "byte-identical records across jobs", failures);

  if (failures > 0) {
    std::printf("selftest: %d failure(s)\n", failures);
    return kExitSelftestFailure;
  }
  std::puts("selftest: all checks passed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing statistics of projected random geometric graphs"};
  app.require_subcommand(1);

  CliOptions opt;
  auto* theory_cmd = app.add_subcommand("theory", "print the model constants table");
  auto* dist_cmd = app.add_subcommand("distribution",
                                      "single-plane crossing-count law");
  auto* two_cmd = app.add_subcommand("two-plane", "covariance at a separation");
  auto* find_cmd = app.add_subcommand("find-plane",
                                      "first crossing-free random plane");
  auto* exist_cmd = app.add_subcommand("existence-scan",
                                       "zero-crossing plane grid scan");
  auto* self_cmd = app.add_subcommand("selftest", "kernel and constants checks");
  for (CLI::App* cmd : {theory_cmd, dist_cmd, two_cmd, find_cmd, exist_cmd}) {
    add_common_flags(cmd, opt);
  }
  (void)self_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (theory_cmd->parsed()) return run_theory(opt);
    if (dist_cmd->parsed()) return run_distribution_cmd(opt);
    if (two_cmd->parsed()) return run_two_plane_cmd(opt);
    if (find_cmd->parsed()) return run_find_plane_cmd(opt);
    if (exist_cmd->parsed()) return run_existence_cmd(opt);
    if (self_cmd->parsed()) return run_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
