#pragma once

// Shared generators for randomized tests. Everything is seeded explicitly so
// each suite is reproducible run to run.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "sphereworld/configuration.hpp"
#include "sphereworld/validation.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld::testing {

using Rng = std::mt19937_64;

inline Point random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Point v(dim);
    for (double& x : v) x = gauss(rng);
    const double len = norm(v);
    if (len > 1e-12) return scaled(v, 1.0 / len);
  }
}

inline Point random_point_in_ball(int dim, double radius, Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    Point p(dim);
    for (double& x : p) x = unit(rng) * radius;
    if (norm(p) <= radius) return p;
  }
}

// Valid world with comfortable slack in every defining inequality, so tests
// can push points close to boundaries without tripping over geometry.
inline SphereWorld random_world(int dim, int obstacle_count, Rng& rng, double work_radius = 10.0) {
  std::uniform_real_distribution<double> radius_dist(0.5, 1.5);
  for (;;) {
    SphereWorld world;
    world.dim = dim;
    world.work_radius = work_radius;
    bool ok = true;
    for (int i = 0; i < obstacle_count && ok; ++i) {
      for (int attempt = 0;; ++attempt) {
        if (attempt > 200) {
          ok = false;
          break;
        }
        Obstacle o{random_point_in_ball(dim, 0.6 * work_radius, rng), radius_dist(rng)};
        bool fits = norm(o.center) + o.radius < work_radius - 0.8;
        for (const Obstacle& other : world.obstacles) {
          fits = fits && distance(o.center, other.center) > o.radius + other.radius + 0.8;
        }
        if (fits) {
          world.obstacles.push_back(std::move(o));
          break;
        }
      }
    }
    if (ok && is_valid(world)) return world;
  }
}

inline Point random_free_point(const SphereWorld& world, Rng& rng, double min_clearance) {
  for (;;) {
    Point p = random_point_in_ball(world.dim, world.work_radius, rng);
    if (!contains(world, p)) continue;
    if (boundary_clearance(world, p) >= min_clearance) return p;
  }
}

inline Configuration random_free_configuration(const SphereWorld& world, int k, Rng& rng,
                                               double min_clearance, double min_separation) {
  for (;;) {
    Configuration c(k);
    for (Point& p : c) p = random_free_point(world, rng, min_clearance);
    if (min_pairwise_distance(c) >= min_separation) return c;
  }
}

// A point as close to the given bounding sphere as the representation
// allows, nudged to stay inside the free space.
inline Point boundary_point(const SphereWorld& world, int sphere, const Point& direction) {
  constexpr double kIn = 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
  constexpr double kOut = 1.0 + 4.0 * std::numeric_limits<double>::epsilon();
  Point p;
  if (sphere == kOuterSphere) {
    p = scaled(direction, world.work_radius);
    while (norm(p) > world.work_radius) p = scaled(p, kIn);
  } else {
    const Obstacle& o = world.obstacles.at(sphere);
    p = add(o.center, scaled(direction, o.radius));
    while (distance(p, o.center) < o.radius) {
      p = add(o.center, scaled(sub(p, o.center), kOut));
    }
  }
  return p;
}

inline Permutation random_permutation(int k, Rng& rng) {
  Permutation sigma(k);
  for (int i = 0; i < k; ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

// Plan, validate, and refine sampling while only the inter-sample guard
// objects — the harness contract, usable with any planner callback.
template <typename PlanFn>
inline ValidationReport plan_refined(PlanFn&& plan, const PlanningSpace& space,
                                     const Configuration& a, const Configuration& b,
                                     int max_samples_per_segment = 65536) {
  ValidationReport report;
  for (int s = 256; s <= max_samples_per_segment; s *= 2) {
    report = validate_path(plan(a, b, s), space, a, b);
    if (report.valid || report.step_guard_ok) break;
  }
  return report;
}

}  // namespace sphereworld::testing
