#pragma once

#include <vector>

#include "sphereworld/collar.hpp"
#include "sphereworld/configuration.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld {

// Explicit homeomorphism from the open interior of a sphere world onto
// Euclidean space with one puncture per obstacle. Composition of two closed
// forms:
//
//   collapse:  within the influence shell r_i < d <= R_i of obstacle i, the
//              center distance is rescaled by g_i(d) = R_i * (d - r_i) /
//              (R_i - r_i); identity outside all shells. Shrinks each
//              punctured shell onto the punctured ball around the obstacle
//              center.
//   expand:    x -> x * r0 / (r0 - |x|), blowing the open workspace ball up
//              onto all of R^n.
//
// The punctures are the expanded obstacle centers. Both factors invert in
// closed form, so round trips cost two evaluations and stay at roundoff
// scale.
class PunctureMap {
 public:
  // Influence radii R_i with r_i < R_i; shells must be pairwise disjoint and
  // strictly inside the open workspace ball.
  PunctureMap(SphereWorld world, std::vector<double> influence_radii);

  // R_i = r_i + 2 * w_i, reusing the atlas disjointness preconditions.
  static PunctureMap from_atlas(const CollarAtlas& atlas);

  const SphereWorld& world() const { return world_; }
  double influence_radius(int i) const { return influence_radii_.at(i); }
  const std::vector<Point>& punctures() const { return punctures_; }

  // Requires p strictly interior with boundary clearance >= 1e-12 * r0
  // (closer points are refused rather than mapped to astronomically large
  // outputs). Never returns a puncture.
  Point forward(const Point& p) const;

  // Total on R^n minus the punctures; throws on exact puncture input.
  Point inverse(const Point& y) const;

  Configuration forward(const Configuration& c) const;
  Configuration inverse(const Configuration& c) const;

 private:
  SphereWorld world_;
  std::vector<double> influence_radii_;
  std::vector<Point> punctures_;
};

}  // namespace sphereworld
