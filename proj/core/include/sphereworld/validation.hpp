#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphereworld/path.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld {

// The space a path must stay inside: a sphere world, or Euclidean space
// minus a puncture set.
struct PlanningSpace {
  int dim = 0;
  std::optional<SphereWorld> world;
  std::vector<Point> punctures;  // used when world is absent

  bool is_sphere_world() const { return world.has_value(); }
};

struct ValidationReport {
  bool valid = false;
  // Minima over the dense samples. Boundary clearance is taken over interior
  // samples only (endpoints may touch the boundary) and is NaN when the
  // space has no boundary; puncture clearance is NaN when there are no
  // punctures; separation is +inf for a single robot.
  double min_separation = 0.0;
  double min_boundary_clearance = 0.0;
  double min_puncture_clearance = 0.0;
  double max_step = 0.0;
  // Worst ratio of a per-robot step to the separation where it happens; the
  // guard requires every step to stay below half the separation at its own
  // two samples, so nothing can hide between them.
  double step_guard_ratio = 0.0;
  bool step_guard_ok = false;
  bool endpoints_exact = false;
  bool joins_exact = false;
  std::vector<std::string> rules_fired;
  std::vector<std::string> issues;
};

// Dense-sample validation: every sample must be a free configuration of the
// space, interior samples must clear the boundary strictly, no sample may
// hit a puncture, consecutive segments must agree exactly at joins, the path
// must start and end exactly at the requested configurations, and every
// per-robot displacement between consecutive samples must stay below half
// the separation observed at those samples.
ValidationReport validate_path(const PiecewisePath& path, const PlanningSpace& space,
                               const Configuration& start, const Configuration& goal);

}  // namespace sphereworld
