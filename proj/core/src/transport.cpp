#include "sphereworld/transport.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphereworld {

int tc_value(int n, int m, int k) { return tc_value_detailed(n, m, k).value; }

TcValue tc_value_detailed(int n, int m, int k) {
  if (n < 2) throw std::invalid_argument("tc_value: defined for ambient dimension n >= 2");
  if (k < 2) throw std::invalid_argument("tc_value: defined for k >= 2 robots");
  if (m < 0) throw std::invalid_argument("tc_value: obstacle count must be nonnegative");
  TcValue r;
  r.n_even = n % 2 == 0;
  if (r.n_even) {
    if (m == 0) {
      r.m_case = "m=0";
      r.formula = "2k-2";
      r.value = 2 * k - 2;
    } else if (m == 1) {
      r.m_case = "m=1";
      r.formula = "2k";
      r.value = 2 * k;
    } else {
      r.m_case = "m>=2";
      r.formula = "2k+1";
      r.value = 2 * k + 1;
    }
  } else {
    if (m == 0) {
      r.m_case = "m=0";
      r.formula = "2k-1";
      r.value = 2 * k - 1;
    } else {
      r.m_case = "m>=1";
      r.formula = "2k+1";
      r.value = 2 * k + 1;
    }
  }
  return r;
}

TransportedPlanner::TransportedPlanner(const SphereWorld& world, int k, PlannerMode mode,
                                       double collar_width_fraction)
    : atlas_(CollarAtlas::build(world, collar_width_fraction)),
      pmap_(PunctureMap::from_atlas(atlas_)),
      inner_(punctured_planner(world.dim, k, pmap_.punctures(), mode)) {}

PiecewisePath TransportedPlanner::plan(const Configuration& start, const Configuration& goal,
                                       int samples_per_segment) const {
  const SphereWorld& w = atlas_.world();
  if (!in_free_configuration_space(w, start)) {
    throw std::invalid_argument("start is not a free configuration of the world");
  }
  if (!in_free_configuration_space(w, goal)) {
    throw std::invalid_argument("goal is not a free configuration of the world");
  }
  if (samples_per_segment < 2) {
    throw std::invalid_argument("need at least two samples per segment");
  }

  const Configuration start_core = atlas_.retract(start);
  const Configuration goal_core = atlas_.retract(goal);
  const PiecewisePath inner_path =
      inner_.plan(pmap_.forward(start_core), pmap_.forward(goal_core), samples_per_segment);
  const std::string& rule_id = inner_path.segments.front().rule_id;

  const double join_tol = 1e-8 * w.work_radius;
  const int k = static_cast<int>(start.size());

  PiecewisePath path;
  path.segments.reserve(inner_path.segments.size() + 2);

  // Stage 1: collar isotopy from the start down to its retracted image.
  {
    PathSegment seg;
    seg.rule_id = rule_id;
    seg.label = "collar_in";
    seg.t0 = 0.0;
    seg.t1 = 0.25;
    seg.samples.reserve(samples_per_segment);
    for (int j = 0; j < samples_per_segment; ++j) {
      const double s = static_cast<double>(j) / (samples_per_segment - 1);
      seg.samples.push_back(atlas_.isotopy(start, 1.0 - s));
    }
    seg.samples.front() = start;      // isotopy at s=1 is the identity up to roundoff
    seg.samples.back() = start_core;  // isotopy at s=0 evaluates the retraction
    path.segments.push_back(std::move(seg));
  }

  // Stage 2: the inner path mapped back through the homeomorphism.
  for (const PathSegment& inner_seg : inner_path.segments) {
    PathSegment seg;
    seg.rule_id = inner_seg.rule_id;
    seg.label = inner_seg.label;
    seg.t0 = 0.25 + 0.5 * inner_seg.t0;
    seg.t1 = 0.25 + 0.5 * inner_seg.t1;
    seg.samples.reserve(inner_seg.samples.size());
    for (const Configuration& c : inner_seg.samples) seg.samples.push_back(pmap_.inverse(c));
    path.segments.push_back(std::move(seg));
  }
  // Join drift is bounded by the round-trip tolerance; snap the ends exact.
  {
    Configuration& first = path.segments[1].samples.front();
    Configuration& last = path.segments.back().samples.back();
    for (int i = 0; i < k; ++i) {
      if (distance(first[i], start_core[i]) > join_tol ||
          distance(last[i], goal_core[i]) > join_tol) {
        throw std::logic_error("transport: stage join drift exceeds 1e-8 * r0");
      }
    }
    first = start_core;
    last = goal_core;
  }

  // Stage 3: collar isotopy from the retracted goal back up to the goal.
  {
    PathSegment seg;
    seg.rule_id = rule_id;
    seg.label = "collar_out";
    seg.t0 = 0.75;
    seg.t1 = 1.0;
    seg.samples.reserve(samples_per_segment);
    for (int j = 0; j < samples_per_segment; ++j) {
      const double s = static_cast<double>(j) / (samples_per_segment - 1);
      seg.samples.push_back(atlas_.isotopy(goal, s));
    }
    seg.samples.front() = goal_core;
    seg.samples.back() = goal;
    path.segments.push_back(std::move(seg));
  }
  return path;
}

TcReport tc_report(const SphereWorld& world, int k, PlannerMode mode) {
  TcReport report;
  report.n = world.dim;
  report.m = static_cast<int>(world.obstacles.size());
  report.k = k;
  report.mode = mode;
  report.tc = tc_value(world.dim, report.m, k);
  const TransportedPlanner planner(world, k, mode);
  report.rule_count = planner.rule_count();
  report.gap = static_cast<long long>(report.rule_count) - report.tc;
  report.equality = report.gap == 0;
  report.experimental = planner.experimental();
  return report;
}

}  // namespace sphereworld
