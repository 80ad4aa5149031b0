#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "sphereworld/configuration.hpp"
#include "sphereworld/path.hpp"
#include "sphereworld/planner.hpp"
#include "sphereworld/validation.hpp"

namespace sphereworld {

// A planning task: a space, a labelled start/goal pair, and planner knobs.
//
// JSON layout:
//   {
//     "world": {"n": 2, "r0": 10.0,
//               "obstacles": [{"center": [3.0, 0.0], "radius": 1.0}]},
//     -- or -- "euclidean": {"n": 2, "punctures": [[0.0, 0.0]]},
//     "k": 2,
//     "start": [[-1.0, 0.0], [1.0, 0.0]],
//     "goal":  [[1.0, 0.0], [-1.0, 0.0]],
//     "mode": "strict" | "merged",
//     "collar_width_fraction": 0.2,
//     "samples_per_segment": 256,
//     "seed": 0
//   }
struct Scenario {
  PlanningSpace space;
  int k = 0;
  Configuration start;
  Configuration goal;
  PlannerMode mode = PlannerMode::kStrict;
  double collar_width_fraction = 0.2;
  int samples_per_segment = Planner::kDefaultSamplesPerSegment;
  std::uint64_t seed = 0;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& file);

std::string scenario_to_json(const Scenario& scenario);

// Path document: segments plus the deterministic part of the validation
// report (timings never enter it, so equal inputs give equal bytes).
std::string path_to_json(const PiecewisePath& path, const ValidationReport& report);
PiecewisePath path_from_json(const std::string& json_text);

// Standalone report document; carries timing information as well.
std::string report_to_json(const ValidationReport& report, double plan_ms, double validate_ms,
                           int samples_per_segment_used);

std::string configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& json_text);
std::string points_to_json(const std::vector<Point>& points);
std::vector<Point> points_from_json(const std::string& json_text);

}  // namespace sphereworld
