#pragma once

#include <string>

#include "sphereworld/collar.hpp"
#include "sphereworld/path.hpp"
#include "sphereworld/planner.hpp"
#include "sphereworld/puncture_map.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld {

// Topological complexity of the configuration space of k labelled points in
// an n-dimensional sphere world with m obstacles. The same value serves the
// closed ball, punctured Euclidean space, and the sphere world itself; it
// depends on n only through its parity. Defined for n >= 2, k >= 2, m >= 0.
int tc_value(int n, int m, int k);

struct TcValue {
  int value = 0;
  bool n_even = false;
  std::string m_case;   // "m=0", "m=1", "m>=1", "m>=2"
  std::string formula;  // "2k-2", "2k-1", "2k", "2k+1"
};

TcValue tc_value_detailed(int n, int m, int k);

// Plans motions in a sphere world by conjugating a punctured-space planner
// through the collar retraction and the puncture homeomorphism:
//
//   stage 1  [0, 1/4]   collar isotopy from the start configuration down to
//                        its retracted image,
//   stage 2  [1/4, 3/4]  the inner planner's path, mapped forward, planned,
//                        and mapped back pointwise,
//   stage 3  [3/4, 1]    collar isotopy back up to the goal configuration.
//
// Stage joins agree up to the homeomorphism round-trip drift; they are
// asserted within 1e-8 * r0 and then snapped exact. The rule list mirrors
// the inner planner's: transport adds no rules.
class TransportedPlanner {
 public:
  TransportedPlanner(const SphereWorld& world, int k, PlannerMode mode,
                     double collar_width_fraction = 0.2);

  const SphereWorld& world() const { return atlas_.world(); }
  const CollarAtlas& atlas() const { return atlas_; }
  const PunctureMap& puncture_map() const { return pmap_; }
  const Planner& inner() const { return inner_; }
  const std::vector<LocalRule>& rules() const { return inner_.rules(); }
  std::size_t rule_count() const { return inner_.rule_count(); }
  bool experimental() const { return inner_.experimental(); }

  // Start and goal may touch the boundary; the interior of the path never
  // does.
  PiecewisePath plan(const Configuration& start, const Configuration& goal,
                     int samples_per_segment = Planner::kDefaultSamplesPerSegment) const;

 private:
  CollarAtlas atlas_;
  PunctureMap pmap_;
  Planner inner_;
};

struct TcReport {
  int n = 0;
  int m = 0;
  int k = 0;
  PlannerMode mode = PlannerMode::kStrict;
  int tc = 0;
  std::size_t rule_count = 0;
  long long gap = 0;  // rule_count - tc, >= 0 when the lower bound holds
  bool equality = false;
  bool experimental = false;
};

// TC value for the world's parameters against the transported planner's
// actual rule count.
TcReport tc_report(const SphereWorld& world, int k, PlannerMode mode);

}  // namespace sphereworld
