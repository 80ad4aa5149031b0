#include "sphereworld/collar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sphereworld {

CollarAtlas::CollarAtlas(SphereWorld world, double outer_width,
                         std::vector<double> obstacle_widths)
    : world_(std::move(world)),
      outer_width_(outer_width),
      obstacle_widths_(std::move(obstacle_widths)) {}

CollarAtlas CollarAtlas::build(const SphereWorld& world, double width_fraction) {
  if (!(width_fraction > 0.0)) {
    throw std::invalid_argument("collar width fraction must be positive");
  }
  const double w = width_fraction * min_gap(world);
  return build_with_widths(world, w, std::vector<double>(world.obstacles.size(), w));
}

CollarAtlas CollarAtlas::build_with_widths(const SphereWorld& world, double outer_width,
                                           std::vector<double> obstacle_widths) {
  const auto violations = validate_world(world);
  if (!violations.empty()) {
    throw std::invalid_argument("collar atlas requires a valid world: " + violations.front().message);
  }
  if (obstacle_widths.size() != world.obstacles.size()) {
    throw std::invalid_argument("one collar width per obstacle required");
  }
  if (!(outer_width > 0.0)) throw std::invalid_argument("outer collar width must be positive");
  for (std::size_t i = 0; i < obstacle_widths.size(); ++i) {
    if (!(obstacle_widths[i] > 0.0)) {
      throw std::invalid_argument("collar width of obstacle " + std::to_string(i) +
                                  " must be positive");
    }
  }
  const double r0 = world.work_radius;
  if (!(2.0 * outer_width < r0)) {
    throw std::invalid_argument("outer collar too wide: 2*w_0 >= r_0");
  }
  const int m = static_cast<int>(world.obstacles.size());
  for (int i = 0; i < m; ++i) {
    const Obstacle& o = world.obstacles[i];
    const double reach = o.radius + 2.0 * obstacle_widths[i];
    if (!(norm(o.center) + reach < r0 - 2.0 * outer_width)) {
      throw std::invalid_argument("collar shells overlap: obstacle " + std::to_string(i) +
                                  " shell meets the outer shell (|x_" + std::to_string(i) +
                                  "| + r + 2w >= r_0 - 2w_0)");
    }
    for (int j = i + 1; j < m; ++j) {
      const Obstacle& q = world.obstacles[j];
      const double reach_j = q.radius + 2.0 * obstacle_widths[j];
      if (!(distance(o.center, q.center) > reach + reach_j)) {
        throw std::invalid_argument("collar shells overlap: obstacles " + std::to_string(i) +
                                    " and " + std::to_string(j) + " (centers closer than the sum of shell reaches)");
      }
    }
  }
  return CollarAtlas(world, outer_width, std::move(obstacle_widths));
}

double CollarAtlas::min_width() const {
  double w = outer_width_;
  for (double v : obstacle_widths_) w = std::min(w, v);
  return w;
}

std::optional<CollarCoords> CollarAtlas::collar_coords(const Point& p) const {
  if (!contains(world_, p)) {
    throw std::domain_error("collar_coords: point outside the free space");
  }
  const double r0 = world_.work_radius;
  // Outer shell: t > 0 iff |p| > r0 - w0. The workspace center can never be
  // in a shell because 2*w0 < r0.
  {
    const double rho = norm(p);
    const double t = 1.0 - (r0 - rho) / outer_width_;
    if (t > 0.0) {
      return CollarCoords{kOuterSphere, scaled(p, r0 / rho), t};
    }
  }
  for (int i = 0; i < static_cast<int>(world_.obstacles.size()); ++i) {
    const Obstacle& o = world_.obstacles[i];
    const double d = distance(p, o.center);
    const double t = 1.0 - (d - o.radius) / obstacle_widths_[i];
    if (t > 0.0) {
      return CollarCoords{i, add(o.center, scaled(sub(p, o.center), o.radius / d)), t};
    }
  }
  return std::nullopt;
}

Point CollarAtlas::chart_point(int sphere, const Point& foot, double t) const {
  if (sphere == kOuterSphere) {
    const double r0 = world_.work_radius;
    return scaled(foot, (r0 - outer_width_ * (1.0 - t)) / r0);
  }
  const Obstacle& o = world_.obstacles.at(sphere);
  const double d = o.radius + obstacle_widths_.at(sphere) * (1.0 - t);
  return add(o.center, scaled(sub(foot, o.center), d / o.radius));
}

// The exact radial formulas map the free space into itself, but the last
// rounding can overshoot the chart's own sphere by an ulp near t = 1. Nudge
// back inside so the closed free space really is invariant.
Point CollarAtlas::clamp_to_chart_sphere(int sphere, Point p) const {
  constexpr double kIn = 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
  constexpr double kOut = 1.0 + 4.0 * std::numeric_limits<double>::epsilon();
  if (sphere == kOuterSphere) {
    while (norm(p) > world_.work_radius) p = scaled(p, kIn);
    return p;
  }
  const Obstacle& o = world_.obstacles.at(sphere);
  while (distance(p, o.center) < o.radius) {
    p = add(o.center, scaled(sub(p, o.center), kOut));
  }
  return p;
}

Point CollarAtlas::retract(const Point& p) const {
  const auto cc = collar_coords(p);
  if (!cc) return p;
  return clamp_to_chart_sphere(cc->sphere, chart_point(cc->sphere, cc->foot, 0.5 * cc->t));
}

Point CollarAtlas::isotopy(const Point& p, double s) const {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("isotopy parameter must lie in [0, 1]");
  }
  const auto cc = collar_coords(p);
  if (!cc) return p;
  return clamp_to_chart_sphere(cc->sphere,
                               chart_point(cc->sphere, cc->foot, (0.5 + 0.5 * s) * cc->t));
}

Configuration CollarAtlas::retract(const Configuration& c) const {
  Configuration out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = retract(c[i]);
  return out;
}

Configuration CollarAtlas::isotopy(const Configuration& c, double s) const {
  Configuration out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = isotopy(c[i], s);
  return out;
}

}  // namespace sphereworld
