#include "sphereworld/world.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sphereworld {

namespace {

std::string idx(int i) { return std::to_string(i); }

void require_dim(const SphereWorld& world, const Point& p) {
  if (static_cast<int>(p.size()) != world.dim) {
    throw std::invalid_argument("point dimension " + idx(static_cast<int>(p.size())) +
                                " does not match world dimension " + idx(world.dim));
  }
}

}  // namespace

std::vector<WorldViolation> validate_world(const SphereWorld& world) {
  using Kind = WorldViolation::Kind;
  std::vector<WorldViolation> out;

  if (world.dim < 2) {
    out.push_back({Kind::kBadDimension, -1, -1,
                   "ambient dimension must be at least 2, got " + idx(world.dim)});
  }
  if (!(world.work_radius > 0.0) || !std::isfinite(world.work_radius)) {
    out.push_back({Kind::kNonPositiveWorkRadius, -1, -1, "work radius must be positive and finite"});
  }

  const int m = static_cast<int>(world.obstacles.size());
  for (int i = 0; i < m; ++i) {
    const Obstacle& o = world.obstacles[i];
    if (static_cast<int>(o.center.size()) != world.dim) {
      out.push_back({Kind::kBadDimension, i, -1, "obstacle " + idx(i) + " center has wrong dimension"});
      continue;
    }
    if (!all_finite(o.center) || !std::isfinite(o.radius)) {
      out.push_back({Kind::kNonFiniteValue, i, -1, "obstacle " + idx(i) + " has non-finite data"});
      continue;
    }
    if (!(o.radius > 0.0)) {
      out.push_back({Kind::kNonPositiveObstacleRadius, i, -1,
                     "obstacle " + idx(i) + " radius must be positive"});
    }
    if (!(norm(o.center) + o.radius < world.work_radius)) {
      out.push_back({Kind::kClosureOutsideWorkspace, i, -1,
                     "obstacle " + idx(i) + " closure not inside workspace interior: |x_" + idx(i) +
                         "| + r_" + idx(i) + " >= r_0"});
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Obstacle& a = world.obstacles[i];
      const Obstacle& b = world.obstacles[j];
      if (a.center.size() != b.center.size()) continue;  // reported above
      if (!(distance(a.center, b.center) > a.radius + b.radius)) {
        out.push_back({Kind::kObstaclesIntersect, i, j,
                       "obstacles " + idx(i) + " and " + idx(j) + " intersect: |x_" + idx(i) +
                           " - x_" + idx(j) + "| <= r_" + idx(i) + " + r_" + idx(j)});
      }
    }
  }
  return out;
}

bool is_valid(const SphereWorld& world) { return validate_world(world).empty(); }

bool contains(const SphereWorld& world, const Point& p) {
  require_dim(world, p);
  if (norm(p) > world.work_radius) return false;
  for (const Obstacle& o : world.obstacles) {
    if (distance(p, o.center) < o.radius) return false;
  }
  return true;
}

double default_boundary_tolerance(const SphereWorld& world) {
  return 1e-9 * world.work_radius;
}

Classification classify(const SphereWorld& world, const Point& p) {
  return classify(world, p, default_boundary_tolerance(world));
}

Classification classify(const SphereWorld& world, const Point& p, double tol) {
  require_dim(world, p);
  // Distance to each bounding sphere; the closest one within tolerance wins.
  double best = std::abs(world.work_radius - norm(p));
  int best_sphere = kOuterSphere;
  for (int i = 0; i < static_cast<int>(world.obstacles.size()); ++i) {
    const double d = std::abs(distance(p, world.obstacles[i].center) - world.obstacles[i].radius);
    if (d < best) {
      best = d;
      best_sphere = i;
    }
  }
  if (best <= tol) return {Classification::Kind::kBoundary, best_sphere};
  if (contains(world, p)) return {Classification::Kind::kInterior, kOuterSphere};
  return {Classification::Kind::kOutside, kOuterSphere};
}

double boundary_clearance(const SphereWorld& world, const Point& p) {
  if (!contains(world, p)) {
    throw std::domain_error("boundary_clearance: point lies outside the free space");
  }
  double c = world.work_radius - norm(p);
  for (const Obstacle& o : world.obstacles) {
    c = std::min(c, distance(p, o.center) - o.radius);
  }
  return c;
}

double min_gap(const SphereWorld& world) {
  if (world.obstacles.empty()) return world.work_radius;
  double gap = std::numeric_limits<double>::infinity();
  const int m = static_cast<int>(world.obstacles.size());
  for (int i = 0; i < m; ++i) {
    const Obstacle& o = world.obstacles[i];
    gap = std::min(gap, world.work_radius - (norm(o.center) + o.radius));
    for (int j = i + 1; j < m; ++j) {
      const Obstacle& q = world.obstacles[j];
      gap = std::min(gap, distance(o.center, q.center) - o.radius - q.radius);
    }
  }
  return gap;
}

}  // namespace sphereworld
