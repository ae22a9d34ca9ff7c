// Microbenchmarks for the hot paths: Poisson sampling, edge building,
// and crossing counting.

#include <benchmark/benchmark.h>

#include "rggcross/crossings.hpp"
#include "rggcross/rgg.hpp"
#include "rggcross/theory.hpp"

using namespace rggcross;

namespace {

double radius_for(double t) {
  return theory::radius_for_regime(t, theory::RegimeSpec::constant(1.0));
}

pointprocess::PointCloud make_cloud(double t) {
  RngStream rng(12345);
  return pointprocess::sample_poisson_ball(
      t, geometry::BallWindow::unit_volume(), rng);
}

void BM_SamplePoissonBall(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  RngStream rng(1);
  auto window = geometry::BallWindow::unit_volume();
  for (auto _ : state) {
    auto cloud = pointprocess::sample_poisson_ball(t, window, rng);
    benchmark::DoNotOptimize(cloud.points.data());
  }
}
BENCHMARK(BM_SamplePoissonBall)->Arg(500)->Arg(2000)->Arg(8000);

void BM_BuildEdgesGrid(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  auto cloud = make_cloud(t);
  const double r = radius_for(t);
  for (auto _ : state) {
    auto graph = rgg::build_edges_grid(cloud, r);
    benchmark::DoNotOptimize(graph.edges.data());
  }
}
BENCHMARK(BM_BuildEdgesGrid)->Arg(500)->Arg(2000)->Arg(8000);

void BM_BuildEdgesBruteforce(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  auto cloud = make_cloud(t);
  const double r = radius_for(t);
  for (auto _ : state) {
    auto graph = rgg::build_edges_bruteforce(cloud, r);
    benchmark::DoNotOptimize(graph.edges.data());
  }
}
BENCHMARK(BM_BuildEdgesBruteforce)->Arg(500)->Arg(2000);

void BM_CountCrossingsGrid(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  auto graph = rgg::build_edges_grid(make_cloud(t), radius_for(t));
  auto plane =
      geometry::plane_from_sphere_point(geometry::SpherePoint(0.0, 0.0, 1.0));
  for (auto _ : state) {
    auto set = crossings::count_crossings_grid(graph, plane);
    benchmark::DoNotOptimize(set.crossings.data());
  }
}
BENCHMARK(BM_CountCrossingsGrid)->Arg(500)->Arg(2000)->Arg(8000);

void BM_CountCrossingsBruteforce(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  auto graph = rgg::build_edges_grid(make_cloud(t), radius_for(t));
  auto plane =
      geometry::plane_from_sphere_point(geometry::SpherePoint(0.0, 0.0, 1.0));
  for (auto _ : state) {
    auto set = crossings::count_crossings_bruteforce(graph, plane);
    benchmark::DoNotOptimize(set.crossings.data());
  }
}
BENCHMARK(BM_CountCrossingsBruteforce)->Arg(500)->Arg(2000);

void BM_HasCrossing(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  auto graph = rgg::build_edges_grid(make_cloud(t), radius_for(t));
  auto plane =
      geometry::plane_from_sphere_point(geometry::SpherePoint(0.0, 0.0, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossings::has_crossing(graph, plane));
  }
}
BENCHMARK(BM_HasCrossing)->Arg(2000)->Arg(8000);

}  // namespace

BENCHMARK_MAIN();
