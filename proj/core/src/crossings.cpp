#include "rggcross/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace rggcross::crossings {

using geometry::Point2;
using geometry::ProjectionPlane;
using geometry::Region2;
using rgg::GeometricGraph;

namespace {

double orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

// c assumed collinear with [a, b].
bool on_segment(const Point2& a, const Point2& b, const Point2& c) {
  return std::min(a.u, b.u) <= c.u && c.u <= std::max(a.u, b.u) &&
         std::min(a.v, b.v) <= c.v && c.v <= std::max(a.v, b.v);
}

struct Hit {
  Point2 pt;
  bool degenerate;
};

std::optional<Hit> intersect_segments(const Point2& p1, const Point2& p2,
                                      const Point2& q1, const Point2& q2) {
  double o1 = orient(p1, p2, q1);
  double o2 = orient(p1, p2, q2);
  double o3 = orient(q1, q2, p1);
  double o4 = orient(q1, q2, p2);

  bool strict_p = (o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0);
  bool strict_q = (o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0);
  if (strict_p && strict_q) {
    double s = o3 / (o3 - o4);
    return Hit{Point2{p1.u + s * (p2.u - p1.u), p1.v + s * (p2.v - p1.v)}, false};
  }

  if (o1 != 0.0 || o2 != 0.0 || o3 != 0.0 || o4 != 0.0) {
    // At most a single-point touch: an endpoint with zero orientation
    // lying on the other closed segment.
    if (o1 == 0.0 && on_segment(p1, p2, q1)) return Hit{q1, true};
    if (o2 == 0.0 && on_segment(p1, p2, q2)) return Hit{q2, true};
    if (o3 == 0.0 && on_segment(q1, q2, p1)) return Hit{p1, true};
    if (o4 == 0.0 && on_segment(q1, q2, p2)) return Hit{p2, true};
    return std::nullopt;
  }

  // All orientations zero: collinear (or degenerate) segments. Overlap
  // is an interval along the dominant axis; report its midpoint.
  bool use_u = std::abs(p2.u - p1.u) + std::abs(q2.u - q1.u) >=
               std::abs(p2.v - p1.v) + std::abs(q2.v - q1.v);
  auto coord = [use_u](const Point2& p) { return use_u ? p.u : p.v; };
  double plo = std::min(coord(p1), coord(p2)), phi = std::max(coord(p1), coord(p2));
  double qlo = std::min(coord(q1), coord(q2)), qhi = std::max(coord(q1), coord(q2));
  double lo = std::max(plo, qlo), hi = std::min(phi, qhi);
  if (lo > hi) return std::nullopt;
  double mid = 0.5 * (lo + hi);
  auto lerp_at = [&](const Point2& a, const Point2& b) {
    double ca = coord(a), cb = coord(b);
    if (ca == cb) return a;
    double s = (mid - ca) / (cb - ca);
    return Point2{a.u + s * (b.u - a.u), a.v + s * (b.v - a.v)};
  };
  return Hit{lerp_at(p1, p2), true};
}

struct ProjectedEdges {
  std::vector<Point2> a;  // projection of the lower-index endpoint
  std::vector<Point2> b;  // projection of the higher-index endpoint
};

ProjectedEdges project_edges(const GeometricGraph& graph,
                             const ProjectionPlane& plane) {
  ProjectedEdges pe;
  pe.a.reserve(graph.edges.size());
  pe.b.reserve(graph.edges.size());
  for (const auto& [i, j] : graph.edges) {
    pe.a.push_back(geometry::project(graph.cloud.points[i], plane));
    pe.b.push_back(geometry::project(graph.cloud.points[j], plane));
  }
  return pe;
}

bool share_vertex(const rgg::Edge& e, const rgg::Edge& f) {
  return e.first == f.first || e.first == f.second || e.second == f.first ||
         e.second == f.second;
}

// Tests the unordered edge pair (ea, eb); appends to out on a hit.
void test_pair(const GeometricGraph& graph, const ProjectedEdges& pe,
               std::uint32_t ea, std::uint32_t eb,
               const std::optional<Region2>& region, CrossingSet& out) {
  if (ea > eb) std::swap(ea, eb);
  if (share_vertex(graph.edges[ea], graph.edges[eb])) return;
  auto hit = intersect_segments(pe.a[ea], pe.b[ea], pe.a[eb], pe.b[eb]);
  if (!hit) return;
  if (region && !region->contains(hit->pt)) return;
  if (hit->degenerate) ++out.degenerate_hits;
  out.crossings.push_back(Crossing{ea, eb, hit->pt});
}

struct Cell2 {
  std::int32_t x, y;
  bool operator==(const Cell2&) const = default;
};

struct Cell2Hash {
  std::size_t operator()(const Cell2& c) const {
    std::uint64_t h = static_cast<std::uint32_t>(c.x);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(c.y);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

}  // namespace

std::optional<Point2> segment_intersection_2d(const Point2& p1, const Point2& p2,
                                              const Point2& q1, const Point2& q2) {
  auto hit = intersect_segments(p1, p2, q1, q2);
  if (!hit) return std::nullopt;
  return hit->pt;
}

CrossingSet count_crossings_bruteforce(const GeometricGraph& graph,
                                       const ProjectionPlane& plane,
                                       const std::optional<Region2>& region) {
  CrossingSet out{plane, {}, 0};
  ProjectedEdges pe = project_edges(graph, plane);
  const std::uint32_t m = static_cast<std::uint32_t>(graph.edges.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      test_pair(graph, pe, a, b, region, out);
    }
  }
  return out;
}

CrossingSet count_crossings_grid(const GeometricGraph& graph,
                                 const ProjectionPlane& plane,
                                 const std::optional<Region2>& region) {
  CrossingSet out{plane, {}, 0};
  ProjectedEdges pe = project_edges(graph, plane);
  const std::uint32_t m = static_cast<std::uint32_t>(graph.edges.size());
  if (m < 2) return out;

  // Two projected segments can only cross if their representative
  // endpoints are within 2r, hence within one cell of side 2r.
  const double inv = 1.0 / (2.0 * graph.radius);
  std::unordered_map<Cell2, std::vector<std::uint32_t>, Cell2Hash> cells;
  cells.reserve(m);
  auto cell_of = [inv](const Point2& p) {
    return Cell2{static_cast<std::int32_t>(std::floor(p.u * inv)),
                 static_cast<std::int32_t>(std::floor(p.v * inv))};
  };
  for (std::uint32_t e = 0; e < m; ++e) {
    cells[cell_of(pe.a[e])].push_back(e);
  }

  // Forward half of the 9-neighborhood; within-cell pairs once.
  static constexpr int kFwd[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  for (const auto& [cell, segs] : cells) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        test_pair(graph, pe, segs[i], segs[j], region, out);
      }
    }
    for (const auto& d : kFwd) {
      auto it = cells.find(Cell2{cell.x + d[0], cell.y + d[1]});
      if (it == cells.end()) continue;
      for (std::uint32_t e : segs) {
        for (std::uint32_t f : it->second) {
          test_pair(graph, pe, e, f, region, out);
        }
      }
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const Crossing& l, const Crossing& r) {
              return std::tie(l.edge_a, l.edge_b) < std::tie(r.edge_a, r.edge_b);
            });
  return out;
}

bool has_crossing(const GeometricGraph& graph, const ProjectionPlane& plane) {
  ProjectedEdges pe = project_edges(graph, plane);
  const std::uint32_t m = static_cast<std::uint32_t>(graph.edges.size());
  if (m < 2) return false;

  const double inv = 1.0 / (2.0 * graph.radius);
  std::unordered_map<Cell2, std::vector<std::uint32_t>, Cell2Hash> cells;
  cells.reserve(m);
  auto cell_of = [inv](const Point2& p) {
    return Cell2{static_cast<std::int32_t>(std::floor(p.u * inv)),
                 static_cast<std::int32_t>(std::floor(p.v * inv))};
  };
  for (std::uint32_t e = 0; e < m; ++e) {
    cells[cell_of(pe.a[e])].push_back(e);
  }
  auto pair_hits = [&](std::uint32_t ea, std::uint32_t eb) {
    if (share_vertex(graph.edges[ea], graph.edges[eb])) return false;
    return intersect_segments(pe.a[ea], pe.b[ea], pe.a[eb], pe.b[eb]).has_value();
  };
  static constexpr int kFwd[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  for (const auto& [cell, segs] : cells) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (pair_hits(segs[i], segs[j])) return true;
      }
    }
    for (const auto& d : kFwd) {
      auto it = cells.find(Cell2{cell.x + d[0], cell.y + d[1]});
      if (it == cells.end()) continue;
      for (std::uint32_t e : segs) {
        for (std::uint32_t f : it->second) {
          if (pair_hits(e, f)) return true;
        }
      }
    }
  }
  return false;
}

std::string crossings_csv(const CrossingSet& set) {
  std::string out = "edge_a,edge_b,u,v\n";
  char buf[128];
  for (const auto& c : set.crossings) {
    std::snprintf(buf, sizeof(buf), "%u,%u,%.17g,%.17g\n", c.edge_a, c.edge_b,
                  c.location.u, c.location.v);
    out += buf;
  }
  return out;
}

}  // namespace rggcross::crossings
