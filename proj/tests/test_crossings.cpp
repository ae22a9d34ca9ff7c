#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rggcross/crossings.hpp"
#include "rggcross/testing/oracles.hpp"

using namespace rggcross;
using namespace rggcross::crossings;
using geometry::Point2;

namespace {

rgg::GeometricGraph graph_from(std::vector<geometry::Vec3> pts, double r) {
  pointprocess::PointCloud c;
  c.points = std::move(pts);
  c.intensity = static_cast<double>(c.points.size());
  return rgg::build_edges_bruteforce(std::move(c), r);
}

geometry::ProjectionPlane xy_plane() {
  return geometry::plane_from_sphere_point(geometry::SpherePoint(0.0, 0.0, 1.0));
}

}  // namespace

TEST_CASE("segment intersection hand cases") {
  // Transversal X crossing at the origin.
  auto hit = segment_intersection_2d({-1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}, {1.0, -1.0});
  REQUIRE(hit.has_value());
  CHECK(hit->u == doctest::Approx(0.0));
  CHECK(hit->v == doctest::Approx(0.0));

  // Disjoint parallel segments.
  CHECK(!segment_intersection_2d({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}));

  // Near miss.
  CHECK(!segment_intersection_2d({0.0, 0.0}, {1.0, 0.0}, {0.5, 0.1}, {0.5, 1.0}));

  // Endpoint touch: T junction, witness at the touch point.
  auto t = segment_intersection_2d({0.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}, {0.5, 1.0});
  REQUIRE(t.has_value());
  CHECK(t->u == doctest::Approx(0.5));
  CHECK(t->v == doctest::Approx(0.0));

  // Collinear overlap [0.5, 1] x {0}: witness at the overlap midpoint.
  auto c = segment_intersection_2d({0.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}, {2.0, 0.0});
  REQUIRE(c.has_value());
  CHECK(c->u == doctest::Approx(0.75));
  CHECK(c->v == doctest::Approx(0.0));

  // Collinear but disjoint.
  CHECK(!segment_intersection_2d({0.0, 0.0}, {1.0, 0.0}, {1.5, 0.0}, {2.0, 0.0}));

  // Exact asymmetric transversal point.
  auto a = segment_intersection_2d({0.0, 0.0}, {4.0, 4.0}, {0.0, 3.0}, {4.0, 1.0});
  REQUIRE(a.has_value());
  CHECK(a->u == doctest::Approx(2.0));
  CHECK(a->v == doctest::Approx(2.0));
}

TEST_CASE("four-point crossing and shared-vertex exclusion") {
  // Two edges whose projections cross at the origin.
  auto g = graph_from({{-0.05, -0.05, 0.0},
                       {0.05, 0.05, 0.01},
                       {-0.05, 0.05, 0.0},
                       {0.05, -0.05, 0.01}},
                      0.2);
  REQUIRE(g.edges.size() == 6);  // all pairs within radius
  auto set = count_crossings_bruteforce(g, xy_plane());
  // The projections form a square. Of the three vertex-disjoint edge
  // pairs only the two diagonals cross; opposite sides are parallel.
  CHECK(set.count() == 1);
  REQUIRE(!set.crossings.empty());
  CHECK(set.crossings[0].edge_a < set.crossings[0].edge_b);
  CHECK(set.crossings[0].location.u == doctest::Approx(0.0));
  CHECK(set.crossings[0].location.v == doctest::Approx(0.0));
}

TEST_CASE("no crossings for separated pairs") {
  auto g = graph_from({{-0.3, 0.0, 0.0},
                       {-0.2, 0.0, 0.0},
                       {0.2, 0.0, 0.0},
                       {0.3, 0.0, 0.0}},
                      0.15);
  REQUIRE(g.edges.size() == 2);
  auto set = count_crossings_bruteforce(g, xy_plane());
  CHECK(set.count() == 0);
  CHECK(!has_crossing(g, xy_plane()));
}

TEST_CASE("degenerate hits are counted and audited") {
  // Projected segments form a T junction.
  auto g = graph_from({{0.0, 0.0, 0.0},
                       {0.2, 0.0, 0.05},
                       {0.1, 0.0, 0.2},
                       {0.1, 0.2, 0.2}},
                      0.30);
  auto plane = xy_plane();
  // Edge 0-1 projects onto the u axis, edge 2-3 touches it at (0.1, 0).
  auto set = count_crossings_bruteforce(g, plane);
  CHECK(set.count() == 1);
  CHECK(set.degenerate_hits == 1);
  REQUIRE(!set.crossings.empty());
  // Witness is the projection of the touch point above (0.1, 0, *).
  auto touch = geometry::project({0.1, 0.0, 0.0}, plane);
  CHECK(set.crossings[0].location.u == doctest::Approx(touch.u));
  CHECK(set.crossings[0].location.v == doctest::Approx(touch.v));
}

TEST_CASE("region filter keeps only witnesses inside the region") {
  // Two X-shaped clusters: one crossing at the origin, one at (0.4, 0).
  auto g = graph_from({{-0.05, -0.05, 0.0},
                       {0.05, 0.05, 0.01},
                       {-0.05, 0.05, 0.0},
                       {0.05, -0.05, 0.01},
                       {0.35, -0.05, 0.0},
                       {0.45, 0.05, 0.01},
                       {0.35, 0.05, 0.0},
                       {0.45, -0.05, 0.01}},
                      0.15);
  auto plane = xy_plane();
  auto all = count_crossings_bruteforce(g, plane);
  REQUIRE(all.count() == 2);
  auto inside = count_crossings_bruteforce(g, plane,
                                           geometry::Region2::disk({0.0, 0.0}, 0.1));
  CHECK(inside.count() == 1);
  // Disk around the projected center of the second cluster.
  auto far_center = geometry::project({0.4, 0.0, 0.0}, plane);
  auto right = count_crossings_bruteforce(
      g, plane, geometry::Region2::disk(far_center, 0.1));
  CHECK(right.count() == 1);
  auto empty = count_crossings_bruteforce(g, plane,
                                          geometry::Region2::rect(1.0, 1.0, 2.0, 2.0));
  CHECK(empty.count() == 0);
}

TEST_CASE("grid kernel equals brute force on random graphs") {
  auto w = geometry::BallWindow::unit_volume();
  for (int trial = 0; trial < 30; ++trial) {
    auto rng = RngStream::derive(555, trial);
    auto c = pointprocess::sample_poisson_ball(400.0, w, rng);
    double r = 0.04 + 0.01 * (trial % 4);
    auto g = rgg::build_edges_grid(std::move(c), r);
    auto plane = geometry::plane_from_sphere_point(geometry::sample_sphere_pp(rng));
    auto gb = count_crossings_bruteforce(g, plane);
    auto gg = count_crossings_grid(g, plane);
    REQUIRE(gb.count() == gg.count());
    CHECK(gb.degenerate_hits == gg.degenerate_hits);
    for (std::size_t k = 0; k < gb.crossings.size(); ++k) {
      CHECK(gb.crossings[k].edge_a == gg.crossings[k].edge_a);
      CHECK(gb.crossings[k].edge_b == gg.crossings[k].edge_b);
      CHECK(gb.crossings[k].location.u == doctest::Approx(gg.crossings[k].location.u));
      CHECK(gb.crossings[k].location.v == doctest::Approx(gg.crossings[k].location.v));
    }
    CHECK(has_crossing(g, plane) == (gb.count() > 0));
  }
}

TEST_CASE("grid kernel respects the region filter") {
  auto w = geometry::BallWindow::unit_volume();
  auto region = geometry::Region2::disk({0.0, 0.0}, w.radius / 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto rng = RngStream::derive(556, trial);
    auto c = pointprocess::sample_poisson_ball(500.0, w, rng);
    auto g = rgg::build_edges_grid(std::move(c), 0.05);
    auto plane = xy_plane();
    CHECK(count_crossings_bruteforce(g, plane, region).count() ==
          count_crossings_grid(g, plane, region).count());
  }
}

TEST_CASE("unordered count is one eighth of the ordered tuple count") {
  auto w = geometry::BallWindow::unit_volume();
  for (int trial = 0; trial < 5; ++trial) {
    auto rng = RngStream::derive(557, trial);
    auto c = pointprocess::sample_poisson_ball(40.0, w, rng);
    auto g = rgg::build_edges_bruteforce(std::move(c), 0.3);
    auto plane = geometry::plane_from_sphere_point(geometry::sample_sphere_pp(rng));
    long long ordered = testing::ordered_tuple_crossing_count(g, plane);
    CHECK(ordered == 8 * count_crossings_grid(g, plane).count());
  }
}

TEST_CASE("counts agree on antipodal planes") {
  auto w = geometry::BallWindow::unit_volume();
  auto rng = RngStream::derive(558, 0);
  auto c = pointprocess::sample_poisson_ball(500.0, w, rng);
  auto g = rgg::build_edges_grid(std::move(c), 0.05);
  auto x = geometry::sample_sphere_pp(rng);
  auto p = geometry::plane_from_sphere_point(x);
  auto q = geometry::plane_from_sphere_point(x.antipode());
  CHECK(count_crossings_grid(g, p).count() == count_crossings_grid(g, q).count());
}

TEST_CASE("crossings csv shape") {
  auto g = graph_from({{-0.05, 0.0, 0.0},
                       {0.05, 0.0, 0.01},
                       {0.0, -0.05, 0.05},
                       {0.0, 0.05, 0.06}},
                      0.2);
  auto set = count_crossings_grid(g, xy_plane());
  std::istringstream is(crossings_csv(set));
  std::string line;
  std::getline(is, line);
  CHECK(line == "edge_a,edge_b,u,v");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == set.count());
}
