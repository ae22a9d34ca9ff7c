#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rggcross/geometry.hpp"
#include "rggcross/rgg.hpp"

namespace rggcross::crossings {

using geometry::Point2;

/// One projected edge-pair crossing. Edge indices refer to the graph's
/// canonical edge list, edge_a < edge_b.
struct Crossing {
  std::uint32_t edge_a = 0;
  std::uint32_t edge_b = 0;
  Point2 location;
};

struct CrossingSet {
  geometry::ProjectionPlane plane;
  std::vector<Crossing> crossings;
  /// Hits where an orientation test was exactly zero (collinear overlap
  /// or endpoint touching). Probability zero under the continuous model;
  /// counted as crossings and audited here.
  long long degenerate_hits = 0;

  long long count() const { return static_cast<long long>(crossings.size()); }
};

/// Witness point of the closed-segment intersection, if any. Proper
/// crossings yield the unique transversal point; collinear overlaps the
/// midpoint of the overlap; endpoint touches the touching point.
std::optional<Point2> segment_intersection_2d(const Point2& p1, const Point2& p2,
                                              const Point2& q1, const Point2& q2);

/// All unordered edge pairs, skipping pairs that share a vertex. A pair
/// contributes iff the projected closed segments intersect and the
/// witness point lies in the region (if one is given).
CrossingSet count_crossings_bruteforce(
    const rgg::GeometricGraph& graph, const geometry::ProjectionPlane& plane,
    const std::optional<geometry::Region2>& region = std::nullopt);

/// Same output as brute force; buckets projected segments into a 2-D
/// grid of cell side 2r and tests only 9-neighborhood co-located pairs.
CrossingSet count_crossings_grid(
    const rgg::GeometricGraph& graph, const geometry::ProjectionPlane& plane,
    const std::optional<geometry::Region2>& region = std::nullopt);

/// True iff at least one crossing exists on the plane (early exit).
bool has_crossing(const rgg::GeometricGraph& graph,
                  const geometry::ProjectionPlane& plane);

/// Crossing dump CSV: "edge_a,edge_b,u,v" per crossing.
std::string crossings_csv(const CrossingSet& set);

}  // namespace rggcross::crossings
