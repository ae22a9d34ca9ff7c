#pragma once

#include <vector>

#include "rggcross/geometry.hpp"
#include "rggcross/rng.hpp"

namespace rggcross::pointprocess {

/// Realization of the Poisson process on the ball: point count is
/// Poisson(t * volume), points i.i.d. uniform in the window.
struct PointCloud {
  std::vector<geometry::Vec3> points;
  double intensity = 0.0;
  geometry::BallWindow window = geometry::BallWindow::unit_volume();
};

geometry::Vec3 sample_ball_uniform(RngStream& rng,
                                   const geometry::BallWindow& window);

PointCloud sample_poisson_ball(double t, const geometry::BallWindow& window,
                               RngStream& rng);

}  // namespace rggcross::pointprocess
