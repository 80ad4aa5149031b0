#pragma once

#include <optional>
#include <vector>

#include "sphereworld/configuration.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld {

// Radial collar coordinates of a point near one bounding sphere. The chart
// parameter t equals 1 on the sphere itself and decreases moving into the
// free space; coordinates are only materialized for t in (0, 1]. Everything
// at t <= 0, together with the deep interior, forms the fixed core on which
// the retraction and the isotopy act as the identity.
struct CollarCoords {
  int sphere = kOuterSphere;  // kOuterSphere or obstacle index
  Point foot;                 // foot point on the bounding sphere
  double t = 0.0;             // in (0, 1]
};

// Disjoint radial collars around every bounding sphere of a sphere world,
// with affine reparameterization of the radius:
//
//   outer sphere:  chart(foot, t) has radius  r0 - w0 * (1 - t),
//   obstacle i:    chart(foot, t) has center distance  r_i + w_i * (1 - t),
//
// so each shell spans two widths of radial depth, the first width at
// t in (0, 1] and the second at t in (-1, 0] (never materialized).
//
// The retraction maps t to t/2, pushing the free space off its boundary by
// half a collar width; the isotopy maps t to (1/2 + s/2) * t, sliding
// between the retraction at s = 0 and the identity at s = 1. Both act
// pointwise on configurations, so they are exactly equivariant under
// relabeling and cannot create collisions (each radial map is injective).
class CollarAtlas {
 public:
  // Uniform widths sized as width_fraction * min_gap(world). The default
  // fraction 0.2 leaves the disjointness inequalities slack by construction.
  static CollarAtlas build(const SphereWorld& world, double width_fraction = 0.2);

  // Explicit widths; throws when the shells are not pairwise disjoint inside
  // the workspace interior, naming the violated inequality.
  static CollarAtlas build_with_widths(const SphereWorld& world, double outer_width,
                                       std::vector<double> obstacle_widths);

  const SphereWorld& world() const { return world_; }
  double outer_width() const { return outer_width_; }
  double obstacle_width(int i) const { return obstacle_widths_.at(i); }
  double min_width() const;

  // Chart coordinates of p when p lies in a shell at t > 0; nullopt on the
  // fixed core. Requires contains(world, p).
  std::optional<CollarCoords> collar_coords(const Point& p) const;

  // Evaluates the chart of the given sphere.
  Point chart_point(int sphere, const Point& foot, double t) const;

  // The retraction into the interior: chart parameter halves, fixed core
  // unchanged. Injective and continuous; images clear the boundary by at
  // least min_width()/2.
  Point retract(const Point& p) const;

  // Straight-line isotopy in the chart parameter, s in [0, 1]. s = 0 agrees
  // with retract bit-for-bit, s = 1 reproduces the input up to roundoff.
  Point isotopy(const Point& p, double s) const;

  Configuration retract(const Configuration& c) const;
  Configuration isotopy(const Configuration& c, double s) const;

 private:
  CollarAtlas(SphereWorld world, double outer_width, std::vector<double> obstacle_widths);
  Point clamp_to_chart_sphere(int sphere, Point p) const;

  SphereWorld world_;
  double outer_width_;
  std::vector<double> obstacle_widths_;
};

}  // namespace sphereworld
