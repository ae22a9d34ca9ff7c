#include "rggcross/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace rggcross::rgg {

using geometry::Vec3;

namespace {

struct CellKey {
  std::int32_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint32_t>(k.x);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(k.y);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(k.z);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

}  // namespace

GeometricGraph build_edges_bruteforce(pointprocess::PointCloud cloud, double r) {
  if (r <= 0.0) throw std::invalid_argument("build_edges: radius must be positive");
  GeometricGraph g{std::move(cloud), r, {}};
  const auto& pts = g.cloud.points;
  const double r2 = r * r;
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    for (std::uint32_t j = i + 1; j < pts.size(); ++j) {
      if ((pts[i] - pts[j]).norm2() <= r2) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

GeometricGraph build_edges_grid(pointprocess::PointCloud cloud, double r) {
  if (r <= 0.0) throw std::invalid_argument("build_edges: radius must be positive");
  GeometricGraph g{std::move(cloud), r, {}};
  const auto& pts = g.cloud.points;
  const double r2 = r * r;
  const double inv = 1.0 / r;

  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> cells;
  cells.reserve(pts.size());
  auto key_of = [inv](const Vec3& p) {
    return CellKey{static_cast<std::int32_t>(std::floor(p.x * inv)),
                   static_cast<std::int32_t>(std::floor(p.y * inv)),
                   static_cast<std::int32_t>(std::floor(p.z * inv))};
  };
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    cells[key_of(pts[i])].push_back(i);
  }

  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    CellKey k = key_of(pts[i]);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = cells.find(CellKey{k.x + dx, k.y + dy, k.z + dz});
          if (it == cells.end()) continue;
          for (std::uint32_t j : it->second) {
            if (j <= i) continue;
            if ((pts[i] - pts[j]).norm2() <= r2) {
              g.edges.emplace_back(i, j);
            }
          }
        }
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

double expected_edge_count(double t, double r, const geometry::BallWindow& window) {
  if (r > window.radius) {
    throw std::invalid_argument("expected_edge_count: r exceeds window radius");
  }
  const double kappa3 = 4.0 / 3.0 * M_PI;
  return 0.5 * t * t * kappa3 * r * r * r;
}

std::string vertices_csv(const GeometricGraph& graph) {
  std::string out = "vx,vy,vz\n";
  char buf[128];
  for (const auto& p : graph.cloud.points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.x, p.y, p.z);
    out += buf;
  }
  return out;
}

std::string edges_csv(const GeometricGraph& graph) {
  std::string out = "i,j\n";
  char buf[64];
  for (const auto& [i, j] : graph.edges) {
    std::snprintf(buf, sizeof(buf), "%u,%u\n", i, j);
    out += buf;
  }
  return out;
}

}  // namespace rggcross::rgg
