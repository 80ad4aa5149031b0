#include "sphereworld/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "sphereworld/transport.hpp"

namespace sphereworld {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

// Empty result means the configuration is a valid member of the space's free
// configuration space.
std::string check_configuration(const PlanningSpace& space, const Configuration& c, int k,
                                const char* what) {
  if (static_cast<int>(c.size()) != k) {
    return std::string(what) + " has " + std::to_string(c.size()) + " points, expected " +
           std::to_string(k);
  }
  for (const Point& p : c) {
    if (static_cast<int>(p.size()) != space.dim) return std::string(what) + " has a point of wrong dimension";
    if (!all_finite(p)) return std::string(what) + " has a non-finite point";
  }
  if (!pairwise_distinct(c)) return std::string(what) + " has coincident points";
  if (space.is_sphere_world()) {
    for (const Point& p : c) {
      if (!contains(*space.world, p)) return std::string(what) + " leaves the free space";
    }
  } else {
    for (const Point& p : c) {
      for (const Point& q : space.punctures) {
        if (p == q) return std::string(what) + " contains a puncture point";
      }
    }
  }
  return {};
}

std::string check_space(const PlanningSpace& space) {
  if (space.is_sphere_world()) {
    const auto violations = validate_world(*space.world);
    if (!violations.empty()) return violations.front().message;
    return {};
  }
  if (space.dim < 2) return "ambient dimension must be at least 2";
  for (const Point& q : space.punctures) {
    if (static_cast<int>(q.size()) != space.dim) return "puncture of wrong dimension";
    if (!all_finite(q)) return "non-finite puncture";
  }
  for (std::size_t i = 0; i < space.punctures.size(); ++i) {
    for (std::size_t j = i + 1; j < space.punctures.size(); ++j) {
      if (space.punctures[i] == space.punctures[j]) return "punctures are not pairwise distinct";
    }
  }
  return {};
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string fmt_g(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, int max_samples_per_segment) {
  RunResult res;

  if (std::string err = check_space(scenario.space); !err.empty()) {
    res.exit_code = kExitInvalidWorld;
    res.error = err;
    return res;
  }

  // Planner construction failures are geometry problems (collar widths that
  // do not fit, malformed punctures), not configuration problems.
  std::optional<TransportedPlanner> transported;
  std::optional<Planner> euclidean;
  try {
    if (scenario.space.is_sphere_world()) {
      transported.emplace(*scenario.space.world, scenario.k, scenario.mode,
                          scenario.collar_width_fraction);
      res.rule_count = transported->rule_count();
    } else {
      euclidean.emplace(
          punctured_planner(scenario.space.dim, scenario.k, scenario.space.punctures, scenario.mode));
      res.rule_count = euclidean->rule_count();
    }
  } catch (const std::exception& e) {
    res.exit_code = kExitInvalidWorld;
    res.error = e.what();
    return res;
  }

  if (std::string err = check_configuration(scenario.space, scenario.start, scenario.k, "start");
      !err.empty()) {
    res.exit_code = kExitInvalidConfigurations;
    res.error = err;
    return res;
  }
  if (std::string err = check_configuration(scenario.space, scenario.goal, scenario.k, "goal");
      !err.empty()) {
    res.exit_code = kExitInvalidConfigurations;
    res.error = err;
    return res;
  }

  int spp = std::max(2, scenario.samples_per_segment);
  for (;;) {
    const auto plan_start = Clock::now();
    try {
      res.path = transported ? transported->plan(scenario.start, scenario.goal, spp)
                             : euclidean->plan(scenario.start, scenario.goal, spp);
    } catch (const std::exception& e) {
      res.exit_code = kExitPlannerError;
      res.error = e.what();
      return res;
    }
    res.plan_ms = ms_since(plan_start);

    const auto validate_start = Clock::now();
    res.report = validate_path(res.path, scenario.space, scenario.start, scenario.goal);
    res.validate_ms = ms_since(validate_start);
    res.samples_per_segment_used = spp;

    // The step guard is the one failure sampling density can repair.
    if (res.report.valid || res.report.step_guard_ok || spp * 2 > max_samples_per_segment) break;
    spp *= 2;
  }

  res.exit_code = res.report.valid ? kExitOk : kExitValidationFailed;
  return res;
}

int run_scenario_file(const std::filesystem::path& scenario_file,
                      const std::filesystem::path& out_dir) {
  Scenario scenario;
  try {
    scenario = load_scenario(scenario_file);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidWorld;
  }
  return run_and_write(scenario, out_dir);
}

int run_and_write(const Scenario& scenario, const std::filesystem::path& out_dir) {
  const RunResult res = run_scenario(scenario);
  if (!res.error.empty()) std::fprintf(stderr, "error: %s\n", res.error.c_str());

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (res.exit_code == kExitOk || res.exit_code == kExitValidationFailed) {
    std::ofstream path_out(out_dir / "path.json");
    path_out << path_to_json(res.path, res.report);
    std::ofstream report_out(out_dir / "report.json");
    report_out << report_to_json(res.report, res.plan_ms, res.validate_ms,
                                 res.samples_per_segment_used);
    if (!path_out || !report_out) {
      std::fprintf(stderr, "error: failed to write outputs under %s\n", out_dir.string().c_str());
      return kExitInvalidWorld;
    }
  }
  return res.exit_code;
}

namespace {

// Uniform point in the scenario's sampling region, with a clearance margin
// for sphere worlds so that perturbations cannot push points outside.
Point random_point(const PlanningSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  if (space.is_sphere_world()) {
    const SphereWorld& w = *space.world;
    const double margin = 1e-3 * w.work_radius;
    for (;;) {
      Point p(space.dim);
      for (double& v : p) v = unit(rng) * w.work_radius;
      if (!contains(w, p)) continue;
      if (boundary_clearance(w, p) < margin) continue;
      return p;
    }
  }
  double extent = 5.0;
  for (const Point& q : space.punctures) {
    for (double v : q) extent = std::max(extent, std::abs(v) + 2.0);
  }
  for (;;) {
    Point p(space.dim);
    for (double& v : p) v = unit(rng) * extent;
    bool hits = false;
    for (const Point& q : space.punctures) hits = hits || p == q;
    if (!hits) return p;
  }
}

Configuration random_configuration(const PlanningSpace& space, int k, std::mt19937_64& rng) {
  const double scale = space.is_sphere_world() ? space.world->work_radius : 5.0;
  for (;;) {
    Configuration c(k);
    for (Point& p : c) p = random_point(space, rng);
    if (min_pairwise_distance(c) > 1e-3 * scale) return c;
  }
}

// Random offset that keeps the spread-axis tie pattern intact: robots
// sharing a spread value receive one common offset there.
Configuration perturb_in_domain(const Configuration& c, double size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::map<double, double> level_shift;
  for (const Point& p : c) level_shift.emplace(p[0], unit(rng));

  Configuration offset(c.size(), Point(c.front().size(), 0.0));
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    offset[i][0] = level_shift.at(c[i][0]);
    for (std::size_t d = 1; d < c[i].size(); ++d) offset[i][d] = unit(rng);
    total += dot(offset[i], offset[i]);
  }
  const double scale = total > 0.0 ? size / std::sqrt(total) : 0.0;

  Configuration out = c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t d = 0; d < c[i].size(); ++d) out[i][d] += scale * offset[i][d];
  }
  return out;
}

double sup_path_distance(const PiecewisePath& a, const PiecewisePath& b) {
  double sup = 0.0;
  for (std::size_t s = 0; s < a.segments.size() && s < b.segments.size(); ++s) {
    const auto& sa = a.segments[s].samples;
    const auto& sb = b.segments[s].samples;
    for (std::size_t j = 0; j < sa.size() && j < sb.size(); ++j) {
      for (std::size_t r = 0; r < sa[j].size(); ++r) {
        sup = std::max(sup, distance(sa[j][r], sb[j][r]));
      }
    }
  }
  return sup;
}

}  // namespace

ContinuityReport probe_continuity(const Scenario& scenario, int trials, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("probe delta must be positive");
  if (trials < 1) throw std::invalid_argument("probe needs at least one trial");
  if (std::string err = check_space(scenario.space); !err.empty()) {
    throw std::invalid_argument("probe: " + err);
  }

  std::optional<TransportedPlanner> transported;
  std::optional<Planner> euclidean;
  if (scenario.space.is_sphere_world()) {
    transported.emplace(*scenario.space.world, scenario.k, scenario.mode,
                        scenario.collar_width_fraction);
  } else {
    euclidean.emplace(
        punctured_planner(scenario.space.dim, scenario.k, scenario.space.punctures, scenario.mode));
  }
  const auto plan = [&](const Configuration& a, const Configuration& b) {
    return transported ? transported->plan(a, b, scenario.samples_per_segment)
                       : euclidean->plan(a, b, scenario.samples_per_segment);
  };

  ContinuityReport report;
  report.trials = trials;
  report.delta = delta;
  report.seed = scenario.seed;
  report.experimental = scenario.mode == PlannerMode::kMerged ||
                        (transported ? transported->experimental() : euclidean->experimental());

  std::mt19937_64 rng(scenario.seed);
  std::map<std::string, RuleContinuity> per_rule;
  for (int t = 0; t < trials; ++t) {
    const Configuration a = random_configuration(scenario.space, scenario.k, rng);
    const Configuration b = random_configuration(scenario.space, scenario.k, rng);
    const PiecewisePath base = plan(a, b);
    const std::string rule = base.segments.front().rule_id;

    const Configuration a2 = perturb_in_domain(a, 0.5 * delta, rng);
    const Configuration b2 = perturb_in_domain(b, 0.5 * delta, rng);
    const PiecewisePath moved = plan(a2, b2);
    if (moved.segments.front().rule_id != rule) {
      report.skipped_domain_crossings++;
      continue;
    }

    RuleContinuity& entry = per_rule[rule];
    entry.rule_id = rule;
    entry.trials++;
    entry.max_ratio = std::max(entry.max_ratio, sup_path_distance(base, moved) / delta);
  }

  for (auto& [id, entry] : per_rule) {
    entry.flagged = entry.max_ratio > 1e6;
    report.rules.push_back(entry);
  }

  // Merged mode: probe pairs that trade level counts at constant sum. The
  // two pairs sit 2*eta apart but in different strata of the same domain.
  // Ties are placed on the spread-axis zero hyperplane, the one place the
  // sphere-world transport maps preserve exact spread-axis equality.
  if (scenario.mode == PlannerMode::kMerged && scenario.k >= 2) {
    const double eta = delta;
    const double spacing = scenario.space.is_sphere_world()
                               ? 0.02 * scenario.space.world->work_radius
                               : 1.0;
    const auto stacked = [&](int band, double split) {
      Configuration c(scenario.k, Point(scenario.space.dim, 0.0));
      for (int i = 0; i < scenario.k; ++i) {
        c[i][0] = i == 1 ? split : 0.0;
        c[i][1] = spacing * (band * scenario.k + i + 1);
      }
      return c;
    };
    const Configuration a_tied = stacked(0, 0.0);
    const Configuration a_split = stacked(0, eta);
    const Configuration b_tied = stacked(1, 0.0);
    const Configuration b_split = stacked(1, eta);
    try {
      const PiecewisePath p1 = plan(a_tied, b_split);
      const PiecewisePath p2 = plan(a_split, b_tied);
      if (p1.segments.front().rule_id == p2.segments.front().rule_id) {
        report.tradeoff_ratios.push_back(sup_path_distance(p1, p2) / (2.0 * eta));
      } else {
        report.skipped_domain_crossings++;
      }
    } catch (const std::exception&) {
      // Constructed pair fell outside the space; nothing to report.
    }
  }
  return report;
}

std::string continuity_report_to_json(const ContinuityReport& report) {
  nlohmann::json j;
  j["trials"] = report.trials;
  j["delta"] = report.delta;
  j["seed"] = report.seed;
  j["experimental"] = report.experimental;
  j["skipped_domain_crossings"] = report.skipped_domain_crossings;
  nlohmann::json rules = nlohmann::json::array();
  for (const RuleContinuity& r : report.rules) {
    rules.push_back({{"rule_id", r.rule_id},
                     {"trials", r.trials},
                     {"max_ratio", r.max_ratio},
                     {"flagged", r.flagged}});
  }
  j["rules"] = rules;
  j["tradeoff_ratios"] = report.tradeoff_ratios;
  return j.dump(2) + "\n";
}

int run_batch(const std::filesystem::path& dir, const std::filesystem::path& out_dir,
              int parallelism) {
  if (parallelism < 1) parallelism = 1;

  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());

  struct Row {
    std::string scenario;
    int exit_code = kExitInvalidWorld;
    bool valid = false;
    int n = 0, m = 0, k = 0;
    std::string mode;
    std::size_t rule_count = 0;
    std::size_t rules_fired = 0;
    double min_separation = 0.0;
    int tc = -1;
    long long tc_gap = 0;
    double plan_ms = 0.0, validate_ms = 0.0;
    std::string error;
  };
  std::vector<Row> rows(files.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      Row& row = rows[i];
      row.scenario = files[i].filename().string();
      Scenario scenario;
      try {
        scenario = load_scenario(files[i]);
      } catch (const std::exception& e) {
        row.error = e.what();
        continue;
      }
      row.n = scenario.space.dim;
      row.m = static_cast<int>(scenario.space.is_sphere_world()
                                   ? scenario.space.world->obstacles.size()
                                   : scenario.space.punctures.size());
      row.k = scenario.k;
      row.mode = to_string(scenario.mode);
      const RunResult res = run_scenario(scenario);
      row.exit_code = res.exit_code;
      row.valid = res.report.valid;
      row.rule_count = res.rule_count;
      row.rules_fired = res.report.rules_fired.size();
      row.min_separation = res.report.min_separation;
      row.plan_ms = res.plan_ms;
      row.validate_ms = res.validate_ms;
      row.error = res.error;
      if (row.k >= 2 && row.n >= 2 && res.exit_code != kExitInvalidWorld) {
        row.tc = tc_value(row.n, row.m, row.k);
        row.tc_gap = static_cast<long long>(row.rule_count) - row.tc;
      }
    }
  };

  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(parallelism, std::max<std::size_t>(files.size(), 1));
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ofstream csv(out_dir / "summary.csv");
  csv << "scenario,exit_code,valid,n,m,k,mode,rule_count,rules_fired,min_separation,tc,tc_gap,"
         "plan_ms,validate_ms,error\n";
  int exit_code = 0;
  for (const Row& row : rows) {
    csv << csv_escape(row.scenario) << "," << row.exit_code << "," << (row.valid ? 1 : 0) << ","
        << row.n << "," << row.m << "," << row.k << "," << row.mode << "," << row.rule_count << ","
        << row.rules_fired << "," << fmt_g(row.min_separation) << ","
        << (row.tc >= 0 ? std::to_string(row.tc) : "") << ","
        << (row.tc >= 0 ? std::to_string(row.tc_gap) : "") << "," << fmt_g(row.plan_ms) << ","
        << fmt_g(row.validate_ms) << "," << csv_escape(row.error) << "\n";
    if (row.exit_code != kExitOk) exit_code = kExitValidationFailed;
  }
  if (!csv) {
    std::fprintf(stderr, "error: failed to write %s\n", (out_dir / "summary.csv").string().c_str());
    return kExitInvalidWorld;
  }
  return exit_code;
}

}  // namespace sphereworld
