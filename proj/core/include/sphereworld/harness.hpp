#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sphereworld/path.hpp"
#include "sphereworld/scenario.hpp"
#include "sphereworld/validation.hpp"

namespace sphereworld {

// Exit-code contract shared by the library runner and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidWorld = 1,
  kExitInvalidConfigurations = 2,
  kExitPlannerError = 3,
  kExitValidationFailed = 4,
};

struct RunResult {
  int exit_code = kExitOk;
  std::string error;  // non-empty for exit codes 1-3
  PiecewisePath path;
  ValidationReport report;
  double plan_ms = 0.0;
  double validate_ms = 0.0;
  int samples_per_segment_used = 0;
  std::size_t rule_count = 0;  // planner's declared rule total
};

// Empty result means valid; otherwise a description of the first problem.
std::string check_space(const PlanningSpace& space);
std::string check_configuration(const PlanningSpace& space, const Configuration& c, int k,
                                const char* what);

// Plans the scenario and validates the result. When the inter-sample guard
// trips, sampling is doubled and the scenario replanned, up to the given
// density cap.
RunResult run_scenario(const Scenario& scenario, int max_samples_per_segment = 262144);

// run_scenario plus path.json / report.json written under out_dir; returns
// the exit code.
int run_and_write(const Scenario& scenario, const std::filesystem::path& out_dir);
int run_scenario_file(const std::filesystem::path& scenario_file,
                      const std::filesystem::path& out_dir);

struct RuleContinuity {
  std::string rule_id;
  int trials = 0;
  double max_ratio = 0.0;  // sup path deviation / input perturbation
  bool flagged = false;    // ratio beyond 1e6
};

struct ContinuityReport {
  int trials = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  bool experimental = false;  // merged mode or punctured space: reported, not asserted
  int skipped_domain_crossings = 0;
  std::vector<RuleContinuity> rules;
  // Merged mode only: ratios at constructed pairs where the level counts
  // trade off at constant sum.
  std::vector<double> tradeoff_ratios;
};

// Per-rule Lipschitz estimates from random pairs perturbed within their rule
// domain (tie patterns preserved). Perturbations that still cross a domain
// boundary are skipped and counted.
ContinuityReport probe_continuity(const Scenario& scenario, int trials, double delta);

std::string continuity_report_to_json(const ContinuityReport& report);

// Runs every *.json scenario under dir (sorted by name) with the given
// number of parallel workers and writes summary.csv under out_dir. Returns
// nonzero when any scenario fails.
int run_batch(const std::filesystem::path& dir, const std::filesystem::path& out_dir,
              int parallelism);

}  // namespace sphereworld
