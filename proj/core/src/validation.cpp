#include "sphereworld/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sphereworld {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

ValidationReport validate_path(const PiecewisePath& path, const PlanningSpace& space,
                               const Configuration& start, const Configuration& goal) {
  ValidationReport r;
  r.min_separation = kInf;
  r.min_boundary_clearance = space.is_sphere_world() ? kInf : kNaN;
  r.min_puncture_clearance = space.punctures.empty() || space.is_sphere_world() ? kNaN : kInf;
  r.max_step = 0.0;

  if (path.segments.empty() || path.segments.front().samples.empty()) {
    r.issues.push_back("path has no samples");
    return r;
  }
  for (const PathSegment& seg : path.segments) {
    if (seg.samples.size() < 2) {
      r.issues.push_back("segment '" + seg.label + "' has fewer than two samples");
      return r;
    }
  }

  r.endpoints_exact = path.start() == start && path.end() == goal;
  if (!r.endpoints_exact) r.issues.push_back("endpoints differ from the requested configurations");

  r.joins_exact = true;
  for (std::size_t s = 1; s < path.segments.size(); ++s) {
    if (path.segments[s - 1].samples.back() != path.segments[s].samples.front()) {
      r.joins_exact = false;
      r.issues.push_back("segments " + std::to_string(s - 1) + " and " + std::to_string(s) +
                         " disagree at their join");
    }
  }

  const std::size_t total = path.total_samples();
  bool free_space_ok = true;
  bool interior_ok = true;
  bool puncture_ok = true;

  std::size_t index = 0;
  bool shape_ok = true;
  const Configuration* prev = nullptr;
  double prev_sep = kInf;
  for (const PathSegment& seg : path.segments) {
    if (std::find(r.rules_fired.begin(), r.rules_fired.end(), seg.rule_id) == r.rules_fired.end()) {
      r.rules_fired.push_back(seg.rule_id);
    }
    for (const Configuration& c : seg.samples) {
      if (c.size() != start.size()) {
        if (shape_ok) r.issues.push_back("sample with a wrong robot count");
        shape_ok = false;
        prev = nullptr;
        ++index;
        continue;
      }
      const bool is_endpoint = index == 0 || index == total - 1;

      const double sep = min_pairwise_distance(c);
      r.min_separation = std::min(r.min_separation, sep);

      if (space.is_sphere_world()) {
        for (const Point& p : c) {
          if (!contains(*space.world, p)) {
            if (free_space_ok) r.issues.push_back("sample leaves the free space");
            free_space_ok = false;
            continue;
          }
          const double clearance = boundary_clearance(*space.world, p);
          if (!is_endpoint) {
            r.min_boundary_clearance = std::min(r.min_boundary_clearance, clearance);
            if (!(clearance > 0.0)) {
              if (interior_ok) r.issues.push_back("interior sample touches the boundary");
              interior_ok = false;
            }
          }
        }
      } else {
        for (const Point& p : c) {
          for (const Point& q : space.punctures) {
            const double d = distance(p, q);
            r.min_puncture_clearance = std::min(r.min_puncture_clearance, d);
            if (!(d > 0.0)) {
              if (puncture_ok) r.issues.push_back("sample hits a puncture");
              puncture_ok = false;
            }
          }
        }
      }

      if (prev != nullptr) {
        double step = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          step = std::max(step, distance((*prev)[i], c[i]));
        }
        r.max_step = std::max(r.max_step, step);
        const double local_sep = std::min(prev_sep, sep);
        const double ratio = local_sep > 0.0 ? step / local_sep
                                             : (step > 0.0 ? kInf : 0.0);
        r.step_guard_ratio = std::max(r.step_guard_ratio, ratio);
      }
      prev = &c;
      prev_sep = sep;
      ++index;
    }
  }

  if (!(r.min_separation > 0.0)) r.issues.push_back("two robots collide at a sample");

  r.step_guard_ok = r.step_guard_ratio < 0.5;
  if (!r.step_guard_ok) {
    r.issues.push_back("inter-sample step exceeds half the local separation; refine sampling");
  }

  r.valid = r.endpoints_exact && r.joins_exact && shape_ok && free_space_ok && interior_ok &&
            puncture_ok && r.min_separation > 0.0 && r.step_guard_ok;
  return r;
}

}  // namespace sphereworld
