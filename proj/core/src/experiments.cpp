#include "rggcross/experiments.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rggcross::experiments {

using geometry::BallWindow;
using geometry::ProjectionPlane;
using geometry::SpherePoint;
using geometry::Vec3;

namespace {

constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kPlaneStream = 1;
constexpr std::uint64_t kControlStream = 2;

void parallel_for(long long n, int jobs, const std::function<void(long long)>& fn) {
  if (jobs <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : workers) th.join();
}

SpherePoint default_plane_normal() { return SpherePoint(0.0, 0.0, 1.0); }

std::uint64_t record_seed(std::uint64_t master, long long rep) {
  std::uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (static_cast<std::uint64_t>(rep) + 1));
  return splitmix64(s);
}

std::vector<double> counts_as_doubles(const std::vector<ReplicationRecord>& recs,
                                      std::size_t plane_idx) {
  std::vector<double> xs;
  xs.reserve(recs.size());
  for (const auto& r : recs) xs.push_back(static_cast<double>(r.counts.at(plane_idx)));
  return xs;
}

}  // namespace

double ExperimentConfig::radius() const {
  if (radius_override) {
    if (!unsafe) {
      throw std::invalid_argument("radius override requires the unsafe flag");
    }
    return *radius_override;
  }
  return theory::radius_for_regime(t, regime);
}

void validate(const ExperimentConfig& config) {
  if (config.replications < 1) {
    throw std::invalid_argument("config: replications must be >= 1");
  }
  if (config.t <= 0.0) {
    throw std::invalid_argument("config: t must be positive");
  }
  if (config.jobs < 1) {
    throw std::invalid_argument("config: jobs must be >= 1");
  }
  double r = config.radius();
  if (r <= 0.0) {
    throw std::invalid_argument("config: derived radius is not positive");
  }
  // Sparse-regime guard t*r^3 < 0.1.
  if (!config.unsafe && config.t * r * r * r >= 0.1) {
    throw std::invalid_argument(
        "config: t*r^3 >= 0.1 is outside the sparse regime (pass unsafe to override)");
  }
  if (config.separation &&
      (*config.separation < 0.0 || *config.separation > M_PI / 2.0)) {
    throw std::invalid_argument("config: separation must lie in [0, pi/2]");
  }
}

std::pair<SpherePoint, SpherePoint> plane_pair(double separation) {
  Vec3 x0 = Vec3{1.0, 1.0, 1.0} * (1.0 / std::sqrt(3.0));
  Vec3 e3{0.0, 0.0, 1.0};
  Vec3 tangent = (e3 - x0 * e3.dot(x0)).normalized();
  Vec3 y = x0 * std::cos(separation) + tangent * std::sin(separation);
  return {SpherePoint(x0.normalized()), SpherePoint(y.normalized())};
}

DistributionResult run_distribution(const ExperimentConfig& config) {
  validate(config);
  DistributionResult res;
  res.config = config;
  res.radius = config.radius();
  const BallWindow window = BallWindow::unit_volume();
  res.M_theory = theory::expected_crossings(config.t, res.radius, window, config.region);
  const ProjectionPlane plane = geometry::plane_from_sphere_point(
      config.plane ? *config.plane : default_plane_normal());

  res.records.resize(static_cast<std::size_t>(config.replications));
  parallel_for(config.replications, config.jobs, [&](long long rep) {
    RngStream rng = RngStream::derive(config.master_seed, static_cast<std::uint64_t>(rep),
                                      kGraphStream);
    auto cloud = pointprocess::sample_poisson_ball(config.t, window, rng);
    auto graph = rgg::build_edges_grid(std::move(cloud), res.radius);
    auto cs = crossings::count_crossings_grid(graph, plane, config.region);
    auto& rec = res.records[static_cast<std::size_t>(rep)];
    rec.replication_index = rep;
    rec.seed = record_seed(config.master_seed, rep);
    rec.n_vertices = static_cast<long long>(graph.cloud.points.size());
    rec.n_edges = static_cast<long long>(graph.edges.size());
    rec.counts = {cs.count()};
    rec.degenerate_hits = cs.degenerate_hits;
  });

  for (const auto& rec : res.records) {
    res.pmf.add(rec.counts[0]);
    res.degenerate_hits += rec.degenerate_hits;
  }
  auto xs = counts_as_doubles(res.records, 0);
  auto [mean, hw] = stats::mean_ci(xs);
  res.mean = mean;
  res.mean_halfwidth = hw;
  res.tv = stats::tv_distance_to_poisson(res.pmf, res.M_theory);
  res.w1 = stats::wasserstein1_counts(res.pmf, res.M_theory);
  return res;
}

TwoPlaneResult run_two_plane(const ExperimentConfig& config) {
  validate(config);
  if (!config.separation) {
    throw std::invalid_argument("two-plane: separation is required");
  }
  TwoPlaneResult res;
  res.config = config;
  res.radius = config.radius();
  res.separation = *config.separation;
  const BallWindow window = BallWindow::unit_volume();
  res.M_theory = theory::expected_crossings(config.t, res.radius, window);
  auto [nx, ny] = plane_pair(res.separation);
  const ProjectionPlane plane_x = geometry::plane_from_sphere_point(nx);
  const ProjectionPlane plane_y = geometry::plane_from_sphere_point(ny);

  res.records.resize(static_cast<std::size_t>(config.replications));
  parallel_for(config.replications, config.jobs, [&](long long rep) {
    RngStream rng = RngStream::derive(config.master_seed, static_cast<std::uint64_t>(rep),
                                      kGraphStream);
    auto graph = rgg::build_edges_grid(
        pointprocess::sample_poisson_ball(config.t, window, rng), res.radius);
    long long cx = crossings::count_crossings_grid(graph, plane_x).count();
    long long cy;
    if (config.two_plane_control) {
      RngStream rng2 = RngStream::derive(config.master_seed,
                                         static_cast<std::uint64_t>(rep), kControlStream);
      auto graph2 = rgg::build_edges_grid(
          pointprocess::sample_poisson_ball(config.t, window, rng2), res.radius);
      cy = crossings::count_crossings_grid(graph2, plane_y).count();
    } else {
      cy = crossings::count_crossings_grid(graph, plane_y).count();
    }
    auto& rec = res.records[static_cast<std::size_t>(rep)];
    rec.replication_index = rep;
    rec.seed = record_seed(config.master_seed, rep);
    rec.n_vertices = static_cast<long long>(graph.cloud.points.size());
    rec.n_edges = static_cast<long long>(graph.edges.size());
    rec.counts = {cx, cy};
  });

  auto xs = counts_as_doubles(res.records, 0);
  auto ys = counts_as_doubles(res.records, 1);
  res.mean_x = stats::mean_ci(xs).first;
  res.mean_y = stats::mean_ci(ys).first;
  res.var_x = stats::sample_variance(xs);
  res.var_y = stats::sample_variance(ys);
  auto [cov, hw] = stats::covariance_ci(xs, ys);
  res.cov = cov;
  res.cov_halfwidth = hw;
  // Diagnostic orders at the alpha implied by the separation: the bound
  // applies whenever d(x, y) > t^-alpha.
  double alpha = res.separation > 0.0 && res.separation < 1.0
                     ? -std::log(res.separation) / std::log(config.t)
                     : 0.0;
  res.diagnostics = theory::bound_terms(config.t, res.radius, alpha);
  return res;
}

FindPlaneResult run_find_plane(const ExperimentConfig& config) {
  validate(config);
  if (config.regime.kind != theory::RegimeSpec::Kind::Constant) {
    throw std::invalid_argument("find-plane: constant regime required");
  }
  if (!config.max_planes || *config.max_planes < 1) {
    throw std::invalid_argument("find-plane: max_planes is required");
  }
  const int m = *config.max_planes;
  FindPlaneResult res;
  res.config = config;
  res.radius = config.radius();
  const BallWindow window = BallWindow::unit_volume();
  res.M_theory = theory::expected_crossings(config.t, res.radius, window);

  res.records.resize(static_cast<std::size_t>(config.replications));
  parallel_for(config.replications, config.jobs, [&](long long rep) {
    RngStream graph_rng = RngStream::derive(
        config.master_seed, static_cast<std::uint64_t>(rep), kGraphStream);
    auto graph = rgg::build_edges_grid(
        pointprocess::sample_poisson_ball(config.t, window, graph_rng), res.radius);
    RngStream plane_rng = RngStream::derive(
        config.master_seed, static_cast<std::uint64_t>(rep), kPlaneStream);
    auto& rec = res.records[static_cast<std::size_t>(rep)];
    rec.replication_index = rep;
    rec.seed = record_seed(config.master_seed, rep);
    rec.n_vertices = static_cast<long long>(graph.cloud.points.size());
    rec.n_edges = static_cast<long long>(graph.edges.size());
    rec.censored = true;
    for (int n = 1; n <= m; ++n) {
      SpherePoint y = geometry::sample_sphere_pp(plane_rng);
      if (!crossings::has_crossing(graph, geometry::plane_from_sphere_point(y))) {
        rec.first_success_index = n;
        rec.censored = false;
        break;
      }
    }
  });

  res.empirical_cdf.assign(static_cast<std::size_t>(m), 0.0);
  res.theory_cdf.assign(static_cast<std::size_t>(m), 0.0);
  for (const auto& rec : res.records) {
    if (rec.censored) {
      ++res.censored_count;
      continue;
    }
    for (int k = static_cast<int>(rec.first_success_index); k <= m; ++k) {
      res.empirical_cdf[static_cast<std::size_t>(k - 1)] += 1.0;
    }
  }
  for (int k = 1; k <= m; ++k) {
    res.empirical_cdf[static_cast<std::size_t>(k - 1)] /=
        static_cast<double>(config.replications);
    res.theory_cdf[static_cast<std::size_t>(k - 1)] =
        theory::geometric_cdf(k, res.M_theory);
  }
  return res;
}

ExistenceResult run_existence_scan(const ExperimentConfig& config) {
  validate(config);
  if (config.regime.kind != theory::RegimeSpec::Kind::Log) {
    throw std::invalid_argument("existence-scan: log regime required");
  }
  if (!config.grid_resolution || *config.grid_resolution < 1) {
    throw std::invalid_argument("existence-scan: grid_resolution is required");
  }
  const int g = *config.grid_resolution;
  ExistenceResult res;
  res.config = config;
  res.radius = config.radius();
  res.log_exponent = config.regime.log_exponent();
  if (res.log_exponent >= 0.125 && !config.unsafe) {
    res.warning = "log exponent c >= 1/8: outside the proven existence regime";
  }
  const BallWindow window = BallWindow::unit_volume();

  // Equal-area grid on the positive octant: uniform in azimuth and in
  // the z coordinate.
  std::vector<ProjectionPlane> planes;
  planes.reserve(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    double phi = (i + 0.5) / g * (M_PI / 2.0);
    for (int j = 0; j < g; ++j) {
      double z = (j + 0.5) / g;
      double s = std::sqrt(1.0 - z * z);
      Vec3 n{s * std::cos(phi), s * std::sin(phi), z};
      planes.push_back(geometry::plane_from_sphere_point(SpherePoint(n.normalized())));
    }
  }

  res.records.resize(static_cast<std::size_t>(config.replications));
  parallel_for(config.replications, config.jobs, [&](long long rep) {
    RngStream rng = RngStream::derive(config.master_seed, static_cast<std::uint64_t>(rep),
                                      kGraphStream);
    auto graph = rgg::build_edges_grid(
        pointprocess::sample_poisson_ball(config.t, window, rng), res.radius);
    long long zero = 0;
    for (const auto& plane : planes) {
      if (!crossings::has_crossing(graph, plane)) {
        // Certify with the reference kernel.
        if (crossings::count_crossings_bruteforce(graph, plane).count() != 0) {
          throw std::logic_error("existence-scan: kernel disagreement on zero plane");
        }
        ++zero;
      }
    }
    auto& rec = res.records[static_cast<std::size_t>(rep)];
    rec.replication_index = rep;
    rec.seed = record_seed(config.master_seed, rep);
    rec.n_vertices = static_cast<long long>(graph.cloud.points.size());
    rec.n_edges = static_cast<long long>(graph.edges.size());
    rec.n_zero_planes = zero;
  });

  double existing = 0.0, proxy = 0.0;
  for (const auto& rec : res.records) {
    if (rec.n_zero_planes > 0) existing += 1.0;
    proxy += static_cast<double>(rec.n_zero_planes) / static_cast<double>(g) /
             static_cast<double>(g);
  }
  res.existence_fraction = existing / static_cast<double>(config.replications);
  res.measure_proxy = proxy / static_cast<double>(config.replications);
  return res;
}

geometry::Region2 parse_region(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon == std::string::npos ? text.size() : colon);
  if (kind == "full") {
    return geometry::Region2::full_plane();
  }
  if (colon == std::string::npos) {
    throw std::invalid_argument("region: expected disk:r or rect:u0,v0,u1,v1");
  }
  std::string args = text.substr(colon + 1);
  std::vector<double> vals;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    vals.push_back(std::stod(item));
  }
  if (kind == "disk" && (vals.size() == 1 || vals.size() == 3)) {
    double radius = vals.back();
    if (radius <= 0.0) {
      throw std::invalid_argument("region: disk radius must be positive");
    }
    if (vals.size() == 1) {
      return geometry::Region2::disk({0.0, 0.0}, radius);
    }
    return geometry::Region2::disk({vals[0], vals[1]}, radius);
  }
  if (kind == "rect" && vals.size() == 4) {
    return geometry::Region2::rect(vals[0], vals[1], vals[2], vals[3]);
  }
  throw std::invalid_argument("region: unsupported shape '" + text + "'");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  bool have_const = false, have_log = false;
  std::stringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key = value, got '" + line + "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "t") {
      config.t = std::stod(value);
    } else if (key == "c_const") {
      config.regime = theory::RegimeSpec::constant(std::stod(value));
      have_const = true;
    } else if (key == "c_log") {
      config.regime = theory::RegimeSpec::log(std::stod(value));
      have_log = true;
    } else if (key == "replications") {
      config.replications = std::stoll(value);
    } else if (key == "master_seed") {
      config.master_seed = std::stoull(value);
    } else if (key == "plane") {
      std::stringstream ps(value);
      std::string c;
      std::vector<double> xyz;
      while (std::getline(ps, c, ',')) xyz.push_back(std::stod(c));
      if (xyz.size() != 3) throw std::invalid_argument("config: plane needs x,y,z");
      config.plane = geometry::SpherePoint(
          geometry::Vec3{xyz[0], xyz[1], xyz[2]}.normalized());
    } else if (key == "separation") {
      config.separation = std::stod(value);
    } else if (key == "grid_resolution") {
      config.grid_resolution = std::stoi(value);
    } else if (key == "max_planes") {
      config.max_planes = std::stoi(value);
    } else if (key == "region") {
      config.region = parse_region(value);
    } else if (key == "jobs") {
      config.jobs = std::stoi(value);
    } else if (key == "unsafe") {
      config.unsafe = (value == "1" || value == "true");
    } else if (key == "control") {
      config.two_plane_control = (value == "1" || value == "true");
    } else if (key == "radius") {
      config.radius_override = std::stod(value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (have_const && have_log) {
    throw std::invalid_argument("config: c_const and c_log are mutually exclusive");
  }
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace rggcross::experiments
