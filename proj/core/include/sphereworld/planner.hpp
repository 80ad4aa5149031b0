#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sphereworld/configuration.hpp"
#include "sphereworld/path.hpp"

namespace sphereworld {

enum class PlannerMode { kStrict, kMerged };

const char* to_string(PlannerMode mode);
PlannerMode planner_mode_from_string(const std::string& s);

// One local planning rule: a predicate on (start, goal) pairs plus the
// section that serves pairs in its domain. Domains partition the pair space,
// so first-match dispatch picks a unique rule.
struct LocalRule {
  std::string id;
  int lambda_start = -1;    // strict mode: exact spread level counts
  int lambda_goal = -1;
  int lambda_sum = -1;      // merged mode: level counts traded at constant sum
  std::string detour_bits;  // per-robot detour incidence; empty without punctures

  bool matches(int ls, int lg, const std::string& bits) const;
};

// Tame motion planner for k labelled points in R^n, optionally minus a fixed
// puncture set. Finitely many combinatorial rules; each section runs five
// phases of equal duration along two fixed axes (spread axis = coordinate 0,
// lane axis = coordinate 1):
//
//   separate  robots sharing a spread-axis value fan out by distinct
//             multiples of a gap-derived offset, so all spread projections
//             become distinct,
//   lane      each robot's lane coordinate moves to its own integer lane,
//   travel    everything except the lane coordinate moves to the separated
//             goal positions; distinct constant lanes rule out collisions,
//   unlane    lane coordinates move to the separated goal's values,
//   merge     the separation offsets at the goal are removed.
//
// Lanes are assigned by lexicographic rank of the separated start points,
// never by label, which makes planning exactly equivariant under relabeling.
//
// With punctures present, the domain index counts spread-axis levels over
// robots and punctures together, lanes sit strictly above every puncture's
// lane coordinate, and any phase sub-path passing within eps of a puncture
// acquires a tent-profile detour along a fixed axis. Rule ids then carry the
// per-robot detour incidence pattern, and the planner is flagged
// experimental: sampled validity is the contract, continuity across detour
// pattern boundaries is only probed statistically.
class Planner {
 public:
  static constexpr int kDefaultSamplesPerSegment = 256;
  static const std::array<const char*, 5> kPhaseLabels;

  Planner(int dim, int k, PlannerMode mode, std::vector<Point> punctures);

  int dim() const { return dim_; }
  int robot_count() const { return k_; }
  PlannerMode mode() const { return mode_; }
  bool experimental() const { return !punctures_.empty(); }
  const std::vector<Point>& punctures() const { return punctures_; }
  double detour_eps() const { return detour_eps_; }

  const std::vector<LocalRule>& rules() const { return rules_; }
  std::size_t rule_count() const { return rules_.size(); }

  // Number of distinct spread-axis values over the configuration's points
  // and the punctures.
  int lambda(const Configuration& c) const;

  // First rule whose domain contains the pair.
  const LocalRule& rule_for(const Configuration& start, const Configuration& goal) const;

  PiecewisePath plan(const Configuration& start, const Configuration& goal,
                     int samples_per_segment = kDefaultSamplesPerSegment) const;

 private:
  struct Bump {
    int phase = 0;
    int robot = 0;
    double apex = 0.0;       // phase-local time of closest approach, in (0,1)
    double magnitude = 0.0;  // detour peak, eps * (1 - clearance/eps)
  };
  struct Blueprint {
    int lambda_start = 0;
    int lambda_goal = 0;
    std::array<Configuration, 6> keys;  // A, A-sep, laned, travelled, B-sep, B
    std::vector<Bump> bumps;
    std::string detour_bits;
  };

  void validate_input(const Configuration& c, const char* what) const;
  Configuration separate(const Configuration& c) const;
  std::vector<double> lanes_for(const Configuration& separated) const;
  Blueprint make_blueprint(const Configuration& start, const Configuration& goal) const;
  const LocalRule& lookup(int ls, int lg, const std::string& bits) const;
  void build_rule_table();

  int dim_;
  int k_;
  PlannerMode mode_;
  std::vector<Point> punctures_;
  int puncture_levels_ = 0;  // distinct spread-axis values among punctures
  double lane_base_ = 0.0;   // lanes are lane_base_ + 1 + rank
  double detour_eps_ = 0.0;
  int detour_axis_ = 0;
  std::vector<LocalRule> rules_;
};

// Planner for k labelled points in all of R^n.
Planner spread_planner(int dim, int k, PlannerMode mode);

// Planner for k labelled points in R^n minus the given punctures.
Planner punctured_planner(int dim, int k, std::vector<Point> punctures, PlannerMode mode);

struct RuleCensus {
  std::size_t total_rules = 0;
  // One entry per declared rule, in rule order.
  std::vector<std::pair<std::string, std::size_t>> hits;
};

// Dispatches every probe pair and tallies which rule fired. Requires at
// least one probe.
RuleCensus rule_census(const Planner& planner,
                       const std::vector<std::pair<Configuration, Configuration>>& probes);

// Designed probe set hitting every level-count stratum: for each reachable
// (lambda_start, lambda_goal) one witness pair with the tie groups placed
// explicitly.
std::vector<std::pair<Configuration, Configuration>> census_witness_pairs(const Planner& planner);

}  // namespace sphereworld
