#include "sphereworld/puncture_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphereworld {

namespace {

Point expand(const Point& x, double r0) {
  const double rho = norm(x);
  return scaled(x, r0 / (r0 - rho));
}

Point expand_inverse(const Point& y, double r0) {
  const double rho = norm(y);
  return scaled(y, r0 / (r0 + rho));
}

}  // namespace

PunctureMap::PunctureMap(SphereWorld world, std::vector<double> influence_radii)
    : world_(std::move(world)), influence_radii_(std::move(influence_radii)) {
  const auto violations = validate_world(world_);
  if (!violations.empty()) {
    throw std::invalid_argument("puncture map requires a valid world: " + violations.front().message);
  }
  const int m = static_cast<int>(world_.obstacles.size());
  if (static_cast<int>(influence_radii_.size()) != m) {
    throw std::invalid_argument("one influence radius per obstacle required");
  }
  const double r0 = world_.work_radius;
  for (int i = 0; i < m; ++i) {
    const Obstacle& o = world_.obstacles[i];
    const double R = influence_radii_[i];
    if (!(R > o.radius)) {
      throw std::invalid_argument("influence radius of obstacle " + std::to_string(i) +
                                  " must exceed the obstacle radius");
    }
    if (!(norm(o.center) + R < r0)) {
      throw std::invalid_argument("influence shell of obstacle " + std::to_string(i) +
                                  " leaves the open workspace ball");
    }
    for (int j = 0; j < i; ++j) {
      if (!(distance(o.center, world_.obstacles[j].center) > R + influence_radii_[j])) {
        throw std::invalid_argument("influence shells of obstacles " + std::to_string(j) + " and " +
                                    std::to_string(i) + " overlap");
      }
    }
  }
  punctures_.reserve(m);
  for (const Obstacle& o : world_.obstacles) punctures_.push_back(expand(o.center, r0));
}

PunctureMap PunctureMap::from_atlas(const CollarAtlas& atlas) {
  std::vector<double> radii;
  const auto& obstacles = atlas.world().obstacles;
  radii.reserve(obstacles.size());
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    radii.push_back(obstacles[i].radius + 2.0 * atlas.obstacle_width(static_cast<int>(i)));
  }
  return PunctureMap(atlas.world(), std::move(radii));
}

Point PunctureMap::forward(const Point& p) const {
  const double r0 = world_.work_radius;
  if (!contains(world_, p)) {
    throw std::domain_error("forward: point outside the free space");
  }
  const double clearance = boundary_clearance(world_, p);
  if (clearance < 1e-12 * r0) {
    throw std::domain_error("forward: boundary clearance below 1e-12 * r0; point too close to the boundary");
  }
  Point x = p;
  for (int i = 0; i < static_cast<int>(world_.obstacles.size()); ++i) {
    const Obstacle& o = world_.obstacles[i];
    const double d = distance(p, o.center);
    const double R = influence_radii_[i];
    if (d <= R) {
      const double g = R * (d - o.radius) / (R - o.radius);
      x = add(o.center, scaled(sub(p, o.center), g / d));
      break;  // shells are disjoint
    }
  }
  return expand(x, r0);
}

Point PunctureMap::inverse(const Point& y) const {
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    if (y == punctures_[i]) {
      throw std::domain_error("inverse: input equals puncture " + std::to_string(i));
    }
  }
  const double r0 = world_.work_radius;
  Point x = expand_inverse(y, r0);
  for (int i = 0; i < static_cast<int>(world_.obstacles.size()); ++i) {
    const Obstacle& o = world_.obstacles[i];
    const double d = distance(x, o.center);
    const double R = influence_radii_[i];
    if (d <= R) {
      if (d == 0.0) {
        // y was so close to the puncture that the contraction collapsed onto
        // the obstacle center; no preimage is representable.
        throw std::domain_error("inverse: input indistinguishable from puncture " + std::to_string(i));
      }
      const double g = o.radius + d * (R - o.radius) / R;
      return add(o.center, scaled(sub(x, o.center), g / d));
    }
  }
  return x;
}

Configuration PunctureMap::forward(const Configuration& c) const {
  Configuration out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = forward(c[i]);
  return out;
}

Configuration PunctureMap::inverse(const Configuration& c) const {
  Configuration out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = inverse(c[i]);
  return out;
}

}  // namespace sphereworld
