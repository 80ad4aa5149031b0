#pragma once

#include <string>
#include <vector>

#include "sphereworld/geometry.hpp"

namespace sphereworld {

// Open ball removed from the workspace. Points exactly on the bounding
// sphere remain part of the free space.
struct Obstacle {
  Point center;
  double radius = 0.0;
};

// Closed ball of radius work_radius centered at the origin, minus m disjoint
// open balls whose closures lie in the workspace interior.
struct SphereWorld {
  int dim = 0;
  double work_radius = 0.0;
  std::vector<Obstacle> obstacles;
};

struct WorldViolation {
  enum class Kind {
    kBadDimension,
    kNonFiniteValue,
    kNonPositiveWorkRadius,
    kNonPositiveObstacleRadius,
    kClosureOutsideWorkspace,
    kObstaclesIntersect,
  };
  Kind kind;
  int i = -1;  // first offending obstacle, when applicable
  int j = -1;  // second offending obstacle, for intersections
  std::string message;
};

// Empty result means the world satisfies every geometric precondition.
std::vector<WorldViolation> validate_world(const SphereWorld& world);
bool is_valid(const SphereWorld& world);

// Membership in the free space: inside or on the outer sphere, outside or on
// every obstacle sphere.
bool contains(const SphereWorld& world, const Point& p);

constexpr int kOuterSphere = -1;

struct Classification {
  enum class Kind { kInterior, kBoundary, kOutside };
  Kind kind = Kind::kOutside;
  int sphere = kOuterSphere;  // for kBoundary: kOuterSphere or obstacle index
};

double default_boundary_tolerance(const SphereWorld& world);
Classification classify(const SphereWorld& world, const Point& p);
Classification classify(const SphereWorld& world, const Point& p, double tol);

// min(r0 - |p|, min_i(|p - x_i| - r_i)); zero exactly on the boundary.
// Requires contains(world, p).
double boundary_clearance(const SphereWorld& world, const Point& p);

// Smallest slack in the world's defining inequalities; work_radius when there
// are no obstacles. Collar widths and influence radii are sized from this.
double min_gap(const SphereWorld& world);

}  // namespace sphereworld
