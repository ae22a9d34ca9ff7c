#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rggcross/pointprocess.hpp"

namespace rggcross::rgg {

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // i < j

/// Point cloud plus the radius-threshold edge set. Edges are canonical:
/// i < j, sorted lexicographically, no duplicates.
struct GeometricGraph {
  pointprocess::PointCloud cloud;
  double radius = 0.0;
  std::vector<Edge> edges;
};

/// Exact edge set via a uniform cell grid of side r with a
/// 27-neighborhood scan. Identical output to the brute-force variant.
GeometricGraph build_edges_grid(pointprocess::PointCloud cloud, double r);

/// All-pairs reference construction.
GeometricGraph build_edges_bruteforce(pointprocess::PointCloud cloud, double r);

/// First-order expected edge count t^2 * kappa_3 * r^3 / 2, ignoring
/// boundary effects (an upper-bound approximation).
double expected_edge_count(double t, double r, const geometry::BallWindow& window);

/// Vertex CSV ("vx,vy,vz") and edge CSV ("i,j") dumps.
std::string vertices_csv(const GeometricGraph& graph);
std::string edges_csv(const GeometricGraph& graph);

}  // namespace rggcross::rgg
