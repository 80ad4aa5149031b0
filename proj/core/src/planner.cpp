#include "sphereworld/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sphereworld {

namespace {

constexpr int kMaxPuncturedRobots = 12;  // rule table is base * 2^k entries

double tent(double s, double apex) {
  // Vanishes at both segment ends; apex is strictly interior by construction.
  return s <= apex ? s / apex : (1.0 - s) / (1.0 - apex);
}

std::string strict_rule_id(int ls, int lg) {
  return "s" + std::to_string(ls) + "-" + std::to_string(lg);
}

std::string merged_rule_id(int sum) { return "m" + std::to_string(sum); }

std::string with_bits(std::string base, const std::string& bits) {
  if (!bits.empty()) {
    base += "-d";
    base += bits;
  }
  return base;
}

}  // namespace

const char* to_string(PlannerMode mode) {
  return mode == PlannerMode::kStrict ? "strict" : "merged";
}

PlannerMode planner_mode_from_string(const std::string& s) {
  if (s == "strict") return PlannerMode::kStrict;
  if (s == "merged") return PlannerMode::kMerged;
  throw std::invalid_argument("unknown planner mode: " + s);
}

bool LocalRule::matches(int ls, int lg, const std::string& bits) const {
  if (detour_bits != bits) return false;
  if (lambda_sum >= 0) return ls + lg == lambda_sum;
  return ls == lambda_start && lg == lambda_goal;
}

const std::array<const char*, 5> Planner::kPhaseLabels = {"separate", "lane", "travel",
                                                          "unlane", "merge"};

Planner::Planner(int dim, int k, PlannerMode mode, std::vector<Point> punctures)
    : dim_(dim), k_(k), mode_(mode), punctures_(std::move(punctures)) {
  if (dim_ < 2) throw std::invalid_argument("planner requires ambient dimension >= 2");
  if (k_ < 1) throw std::invalid_argument("planner requires at least one robot");
  for (const Point& q : punctures_) {
    if (static_cast<int>(q.size()) != dim_) {
      throw std::invalid_argument("puncture dimension does not match the planner's space");
    }
    if (!all_finite(q)) throw std::invalid_argument("punctures must be finite");
  }
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    for (std::size_t j = i + 1; j < punctures_.size(); ++j) {
      if (punctures_[i] == punctures_[j]) {
        throw std::invalid_argument("punctures must be pairwise distinct");
      }
    }
  }
  if (!punctures_.empty()) {
    if (k_ > kMaxPuncturedRobots) {
      throw std::invalid_argument("punctured planner supports at most " +
                                  std::to_string(kMaxPuncturedRobots) + " robots");
    }
    std::set<double> levels;
    double max_u = -std::numeric_limits<double>::infinity();
    for (const Point& q : punctures_) {
      levels.insert(q[0]);
      max_u = std::max(max_u, q[1]);
    }
    puncture_levels_ = static_cast<int>(levels.size());
    lane_base_ = max_u + 1.0;

    // eps: half the smallest of inter-puncture distances and puncture-to-lane
    // band distances. The lowest lane sits at lane_base_ + 1.
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < punctures_.size(); ++i) {
      min_dist = std::min(min_dist, lane_base_ + 1.0 - punctures_[i][1]);
      for (std::size_t j = i + 1; j < punctures_.size(); ++j) {
        min_dist = std::min(min_dist, distance(punctures_[i], punctures_[j]));
      }
    }
    detour_eps_ = 0.5 * min_dist;
    detour_axis_ = dim_ >= 3 ? 2 : 0;
  }
  build_rule_table();
}

void Planner::build_rule_table() {
  std::vector<std::string> patterns;
  if (punctures_.empty()) {
    patterns.push_back("");
  } else {
    patterns.resize(std::size_t{1} << k_);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      std::string bits(k_, '0');
      for (int r = 0; r < k_; ++r) {
        if (p & (std::size_t{1} << r)) bits[r] = '1';
      }
      patterns[p] = bits;
    }
    std::sort(patterns.begin(), patterns.end());
  }

  const int lo = punctures_.empty() ? 1 : puncture_levels_;
  const int hi = punctures_.empty() ? k_ : puncture_levels_ + k_;
  if (mode_ == PlannerMode::kStrict) {
    for (int ls = lo; ls <= hi; ++ls) {
      for (int lg = lo; lg <= hi; ++lg) {
        for (const std::string& bits : patterns) {
          rules_.push_back({with_bits(strict_rule_id(ls, lg), bits), ls, lg, -1, bits});
        }
      }
    }
  } else {
    for (int sum = 2 * lo; sum <= 2 * hi; ++sum) {
      for (const std::string& bits : patterns) {
        rules_.push_back({with_bits(merged_rule_id(sum), bits), -1, -1, sum, bits});
      }
    }
  }
}

int Planner::lambda(const Configuration& c) const {
  std::set<double> levels;
  for (const Point& q : punctures_) levels.insert(q[0]);
  for (const Point& p : c) levels.insert(p[0]);
  return static_cast<int>(levels.size());
}

void Planner::validate_input(const Configuration& c, const char* what) const {
  if (static_cast<int>(c.size()) != k_) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(k_) + " points");
  }
  for (const Point& p : c) {
    if (static_cast<int>(p.size()) != dim_) {
      throw std::invalid_argument(std::string(what) + ": point dimension mismatch");
    }
    if (!all_finite(p)) throw std::invalid_argument(std::string(what) + ": non-finite point");
    for (const Point& q : punctures_) {
      if (p == q) throw std::invalid_argument(std::string(what) + ": configuration contains a puncture");
    }
  }
  if (!pairwise_distinct(c)) {
    throw std::invalid_argument(std::string(what) + ": points must be pairwise distinct");
  }
}

Configuration Planner::separate(const Configuration& c) const {
  // Group robots by exact spread-axis value.
  std::map<double, std::vector<int>> groups;
  for (int i = 0; i < k_; ++i) groups[c[i][0]].push_back(i);

  double min_pos_gap = std::numeric_limits<double>::infinity();
  double prev = 0.0;
  bool have_prev = false;
  for (const auto& [level, members] : groups) {
    if (have_prev) min_pos_gap = std::min(min_pos_gap, level - prev);
    prev = level;
    have_prev = true;
  }
  const double base_gap = groups.size() >= 2 ? min_pos_gap : 1.0;
  const double delta = base_gap / (4.0 * k_);

  Configuration out = c;
  for (auto& [level, members] : groups) {
    // Rank within the tie group by lexicographic order of the full vectors.
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return lex_less(c[a], c[b]); });
    for (std::size_t rank = 0; rank < members.size(); ++rank) {
      out[members[rank]][0] += static_cast<double>(rank) * delta;
    }
  }
  return out;
}

std::vector<double> Planner::lanes_for(const Configuration& separated) const {
  std::vector<int> order(k_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(separated[a], separated[b]); });
  std::vector<double> lanes(k_);
  for (int rank = 0; rank < k_; ++rank) {
    lanes[order[rank]] = lane_base_ + 1.0 + static_cast<double>(rank);
  }
  return lanes;
}

Planner::Blueprint Planner::make_blueprint(const Configuration& start,
                                           const Configuration& goal) const {
  Blueprint bp;
  bp.lambda_start = lambda(start);
  bp.lambda_goal = lambda(goal);

  const Configuration start_sep = separate(start);
  const Configuration goal_sep = separate(goal);
  const std::vector<double> lanes = lanes_for(start_sep);

  Configuration laned = start_sep;
  for (int i = 0; i < k_; ++i) laned[i][1] = lanes[i];
  Configuration travelled = goal_sep;
  for (int i = 0; i < k_; ++i) travelled[i][1] = lanes[i];

  bp.keys = {start, start_sep, laned, travelled, goal_sep, goal};

  if (!punctures_.empty()) {
    std::string bits(k_, '0');
    for (int phase = 0; phase < 5; ++phase) {
      const Configuration& a = bp.keys[phase];
      const Configuration& b = bp.keys[phase + 1];
      for (int robot = 0; robot < k_; ++robot) {
        for (const Point& q : punctures_) {
          double s_min = 0.0;
          const double clearance = segment_point_distance(a[robot], b[robot], q, &s_min);
          if (clearance < detour_eps_ && s_min > 0.0 && s_min < 1.0) {
            bp.bumps.push_back({phase, robot, s_min, detour_eps_ - clearance});
            bits[robot] = '1';
          }
        }
      }
    }
    bp.detour_bits = bits;
  }
  return bp;
}

const LocalRule& Planner::lookup(int ls, int lg, const std::string& bits) const {
  for (const LocalRule& rule : rules_) {
    if (rule.matches(ls, lg, bits)) return rule;
  }
  // Coverage is total by construction; reaching this point is a bug.
  throw std::logic_error("no rule matched (lambda " + std::to_string(ls) + "," +
                         std::to_string(lg) + ", bits '" + bits + "')");
}

const LocalRule& Planner::rule_for(const Configuration& start, const Configuration& goal) const {
  validate_input(start, "start");
  validate_input(goal, "goal");
  const Blueprint bp = make_blueprint(start, goal);
  return lookup(bp.lambda_start, bp.lambda_goal, bp.detour_bits);
}

PiecewisePath Planner::plan(const Configuration& start, const Configuration& goal,
                            int samples_per_segment) const {
  validate_input(start, "start");
  validate_input(goal, "goal");
  if (samples_per_segment < 2) {
    throw std::invalid_argument("need at least two samples per segment");
  }

  const Blueprint bp = make_blueprint(start, goal);
  const LocalRule& rule = lookup(bp.lambda_start, bp.lambda_goal, bp.detour_bits);

  PiecewisePath path;
  path.segments.reserve(5);
  for (int phase = 0; phase < 5; ++phase) {
    PathSegment seg;
    seg.rule_id = rule.id;
    seg.label = kPhaseLabels[phase];
    seg.t0 = phase / 5.0;
    seg.t1 = (phase + 1) / 5.0;
    seg.samples.reserve(samples_per_segment);
    for (int j = 0; j < samples_per_segment; ++j) {
      const double s = static_cast<double>(j) / (samples_per_segment - 1);
      Configuration cfg = interpolate(bp.keys[phase], bp.keys[phase + 1], s);
      for (const Bump& bump : bp.bumps) {
        if (bump.phase != phase) continue;
        cfg[bump.robot][detour_axis_] += bump.magnitude * tent(s, bump.apex);
      }
      seg.samples.push_back(std::move(cfg));
    }
    path.segments.push_back(std::move(seg));
  }
  return path;
}

Planner spread_planner(int dim, int k, PlannerMode mode) {
  return Planner(dim, k, mode, {});
}

Planner punctured_planner(int dim, int k, std::vector<Point> punctures, PlannerMode mode) {
  return Planner(dim, k, mode, std::move(punctures));
}

RuleCensus rule_census(const Planner& planner,
                       const std::vector<std::pair<Configuration, Configuration>>& probes) {
  if (probes.empty()) throw std::invalid_argument("rule census requires at least one probe pair");
  std::map<std::string, std::size_t> tally;
  for (const auto& [a, b] : probes) tally[planner.rule_for(a, b).id]++;
  RuleCensus census;
  census.total_rules = planner.rule_count();
  census.hits.reserve(planner.rule_count());
  for (const LocalRule& rule : planner.rules()) {
    const auto it = tally.find(rule.id);
    census.hits.emplace_back(rule.id, it == tally.end() ? 0 : it->second);
  }
  return census;
}

std::vector<std::pair<Configuration, Configuration>> census_witness_pairs(const Planner& planner) {
  const int k = planner.robot_count();
  const int dim = planner.dim();
  const auto& punctures = planner.punctures();

  // Fresh spread-axis levels and lane values placed away from every puncture.
  double fresh_e = 1.0;
  double fresh_u = 1.0;
  std::vector<double> puncture_levels;
  for (const Point& q : punctures) {
    fresh_e = std::max(fresh_e, q[0] + 2.0);
    fresh_u = std::max(fresh_u, q[1] + 2.0);
    puncture_levels.push_back(q[0]);
  }
  std::sort(puncture_levels.begin(), puncture_levels.end());
  puncture_levels.erase(std::unique(puncture_levels.begin(), puncture_levels.end()),
                        puncture_levels.end());

  // Witness with exactly `fresh` robot levels that are new, the remaining
  // robots stacked on existing puncture levels (when any exist).
  const auto witness = [&](int fresh) {
    Configuration c(k, Point(dim, 0.0));
    for (int i = 0; i < k; ++i) {
      if (i < fresh || puncture_levels.empty()) {
        c[i][0] = fresh_e + std::min(i, std::max(fresh - 1, 0));
      } else {
        c[i][0] = puncture_levels[(i - fresh) % puncture_levels.size()];
      }
      c[i][1] = fresh_u + i;  // distinct lanes keep the points distinct
    }
    return c;
  };

  const int base = static_cast<int>(puncture_levels.size());
  const int lo = punctures.empty() ? 1 : base;      // lambda when no fresh level
  const int hi = punctures.empty() ? k : base + k;  // lambda when all levels fresh
  const auto fresh_for = [&](int lam) { return punctures.empty() ? lam : lam - base; };

  std::vector<std::pair<Configuration, Configuration>> pairs;
  if (planner.mode() == PlannerMode::kStrict) {
    for (int ls = lo; ls <= hi; ++ls) {
      for (int lg = lo; lg <= hi; ++lg) {
        pairs.emplace_back(witness(fresh_for(ls)), witness(fresh_for(lg)));
      }
    }
  } else {
    for (int sum = 2 * lo; sum <= 2 * hi; ++sum) {
      const int ls = std::max(lo, sum - hi);
      pairs.emplace_back(witness(fresh_for(ls)), witness(fresh_for(sum - ls)));
    }
  }
  return pairs;
}

}  // namespace sphereworld
