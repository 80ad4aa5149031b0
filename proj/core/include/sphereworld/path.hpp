#pragma once

#include <string>
#include <vector>

#include "sphereworld/configuration.hpp"

namespace sphereworld {

// One continuously sampled piece of a planned motion. Samples are uniformly
// spaced over [t0, t1] and consecutive segments agree exactly at their
// shared endpoint.
struct PathSegment {
  std::string rule_id;  // rule that produced the motion
  std::string label;    // phase within the rule's section
  double t0 = 0.0;
  double t1 = 1.0;
  std::vector<Configuration> samples;
};

struct PiecewisePath {
  std::vector<PathSegment> segments;

  const Configuration& start() const;
  const Configuration& end() const;
  std::size_t total_samples() const;
};

}  // namespace sphereworld
