// Command-line front end: scenario planning, validation, map evaluation,
// continuity probing, rendering, and batch runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sphereworld/harness.hpp"
#include "sphereworld/scenario.hpp"
#include "sphereworld/svg.hpp"
#include "sphereworld/transport.hpp"

namespace {

using namespace sphereworld;

// SPHEREWORLD_MP_SEED beats the scenario's seed when set.
void apply_overrides(Scenario& scenario, const std::optional<std::string>& mode) {
  if (mode) scenario.mode = planner_mode_from_string(*mode);
  if (const char* env = std::getenv("SPHEREWORLD_MP_SEED")) {
    scenario.seed = std::strtoull(env, nullptr, 10);
  }
}

Scenario load_with_overrides(const std::string& file, const std::optional<std::string>& mode) {
  Scenario scenario = load_scenario(file);
  apply_overrides(scenario, mode);
  return scenario;
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

// World scenarios only; the collar/puncture commands have no meaning in an
// already punctured Euclidean space.
const SphereWorld& require_world(const Scenario& scenario) {
  if (!scenario.space.is_sphere_world()) {
    throw std::invalid_argument("this command needs a scenario with a sphere world");
  }
  return *scenario.space.world;
}

int cmd_validate(const std::string& scenario_file, const std::string& path_file,
                 const std::optional<std::string>& mode) {
  const Scenario scenario = load_with_overrides(scenario_file, mode);
  if (std::string err = check_space(scenario.space); !err.empty()) {
    std::cerr << "invalid world: " << err << "\n";
    return kExitInvalidWorld;
  }
  for (const auto& [c, what] : {std::pair{&scenario.start, "start"}, {&scenario.goal, "goal"}}) {
    if (std::string err = check_configuration(scenario.space, *c, scenario.k, what);
        !err.empty()) {
      std::cerr << "invalid configurations: " << err << "\n";
      return kExitInvalidConfigurations;
    }
  }
  if (path_file.empty()) {
    std::cout << "scenario ok\n";
    return kExitOk;
  }
  std::ifstream in(path_file);
  if (!in) throw std::invalid_argument("cannot open path file " + path_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const PiecewisePath path = path_from_json(buffer.str());
  const ValidationReport report = validate_path(path, scenario.space, scenario.start, scenario.goal);
  std::cout << report_to_json(report, 0.0, 0.0, 0);
  return report.valid ? kExitOk : kExitValidationFailed;
}

int cmd_tc(int n, int m, int k) {
  const TcValue v = tc_value_detailed(n, m, k);
  std::cout << "tc(n=" << n << ", m=" << m << ", k=" << k << ") = " << v.value << "  [n "
            << (v.n_even ? "even" : "odd") << ", " << v.m_case << ": " << v.formula << "]\n";
  return kExitOk;
}

std::string strip_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

int cmd_retract(const std::string& scenario_file) {
  const Scenario scenario = load_with_overrides(scenario_file, std::nullopt);
  const CollarAtlas atlas =
      CollarAtlas::build(require_world(scenario), scenario.collar_width_fraction);
  std::cout << "{\"start\":" << strip_newline(configuration_to_json(atlas.retract(scenario.start)))
            << ",\"goal\":" << strip_newline(configuration_to_json(atlas.retract(scenario.goal)))
            << "}\n";
  return kExitOk;
}

int cmd_punctures(const std::string& scenario_file) {
  const Scenario scenario = load_with_overrides(scenario_file, std::nullopt);
  const CollarAtlas atlas =
      CollarAtlas::build(require_world(scenario), scenario.collar_width_fraction);
  std::cout << points_to_json(PunctureMap::from_atlas(atlas).punctures());
  return kExitOk;
}

int cmd_phi(const std::string& scenario_file, bool inverse) {
  const Scenario scenario = load_with_overrides(scenario_file, std::nullopt);
  const CollarAtlas atlas =
      CollarAtlas::build(require_world(scenario), scenario.collar_width_fraction);
  const PunctureMap map = PunctureMap::from_atlas(atlas);
  std::vector<Point> points = points_from_json(read_stdin());
  for (Point& p : points) p = inverse ? map.inverse(p) : map.forward(p);
  std::cout << points_to_json(points);
  return kExitOk;
}

int cmd_probe(const std::string& scenario_file, int trials, double delta, const std::string& out,
              const std::optional<std::string>& mode) {
  const Scenario scenario = load_with_overrides(scenario_file, mode);
  const ContinuityReport report = probe_continuity(scenario, trials, delta);
  const std::string json = continuity_report_to_json(report);
  std::cout << json;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    std::ofstream file(std::filesystem::path(out) / "continuity.json");
    file << json;
  }
  return kExitOk;
}

int cmd_render(const std::string& scenario_file, const std::string& path_file,
               const std::string& out) {
  const Scenario scenario = load_with_overrides(scenario_file, std::nullopt);
  std::ifstream in(path_file);
  if (!in) throw std::invalid_argument("cannot open path file " + path_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const PiecewisePath path = path_from_json(buffer.str());
  const std::string svg = render_svg(scenario, path);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream file(out);
    file << svg;
    if (!file) throw std::runtime_error("failed to write " + out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision-free motion planning for labelled point robots in sphere worlds"};
  app.require_subcommand(1);

  std::string scenario_file, path_file, out_dir = "out", out_file, batch_dir;
  std::optional<std::string> mode;
  int trials = 200;
  double delta = 1e-6;
  int parallelism = static_cast<int>(std::thread::hardware_concurrency());
  int n = 0, m = 0, k = 0;

  auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_file, "scenario JSON file")->required();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", [&mode](const std::vector<std::string>& v) {
          mode = v.front();
          return true;
        },
        "planner mode override (strict|merged)");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a scenario (and optionally a path)");
  add_scenario(validate);
  validate->add_option("--path", path_file, "path JSON to validate against the scenario");
  add_mode(validate);

  CLI::App* plan = app.add_subcommand("plan", "plan a scenario and write path.json/report.json");
  add_scenario(plan);
  plan->add_option("--out", out_dir, "output directory");
  add_mode(plan);

  CLI::App* tc = app.add_subcommand("tc", "topological complexity of F(X_{n,m}, k)");
  tc->add_option("--n", n, "ambient dimension")->required();
  tc->add_option("--m", m, "number of obstacles")->required();
  tc->add_option("--k", k, "number of robots")->required();

  CLI::App* retract = app.add_subcommand("retract", "print the retracted start/goal configurations");
  add_scenario(retract);

  CLI::App* punctures = app.add_subcommand("punctures", "print the puncture set of the world");
  add_scenario(punctures);

  CLI::App* phi = app.add_subcommand("phi", "map interior points to punctured space (stdin JSON)");
  add_scenario(phi);
  CLI::App* phi_inv = app.add_subcommand("phi-inv", "map punctured-space points back (stdin JSON)");
  add_scenario(phi_inv);

  CLI::App* probe = app.add_subcommand("probe-continuity", "per-rule Lipschitz estimates");
  add_scenario(probe);
  probe->add_option("--trials", trials, "number of random trials");
  probe->add_option("--delta", delta, "perturbation size");
  probe->add_option("--out", out_file, "directory for continuity.json");
  add_mode(probe);

  CLI::App* render = app.add_subcommand("render", "render a planar scenario and path as SVG");
  add_scenario(render);
  render->add_option("--path", path_file, "path JSON file")->required();
  render->add_option("--out", out_file, "output SVG file ('-' for stdout)");

  CLI::App* batch = app.add_subcommand("batch", "run every scenario in a directory");
  batch->add_option("dir", batch_dir, "directory of scenario JSON files")->required();
  batch->add_option("--out", out_dir, "output directory for summary.csv");
  batch->add_option("--parallelism", parallelism, "worker count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(scenario_file, path_file, mode);
    if (plan->parsed()) {
      const Scenario scenario = load_with_overrides(scenario_file, mode);
      return run_and_write(scenario, out_dir);
    }
    if (tc->parsed()) return cmd_tc(n, m, k);
    if (retract->parsed()) return cmd_retract(scenario_file);
    if (punctures->parsed()) return cmd_punctures(scenario_file);
    if (phi->parsed()) return cmd_phi(scenario_file, false);
    if (phi_inv->parsed()) return cmd_phi(scenario_file, true);
    if (probe->parsed()) return cmd_probe(scenario_file, trials, delta, out_file, mode);
    if (render->parsed()) return cmd_render(scenario_file, path_file, out_file);
    if (batch->parsed()) return run_batch(batch_dir, out_dir, parallelism);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidWorld;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPlannerError;
  }
  return kExitOk;
}
