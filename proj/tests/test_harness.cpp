#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sphereworld/harness.hpp"
#include "sphereworld/scenario.hpp"
#include "sphereworld/svg.hpp"
#include "test_support.hpp"

using namespace sphereworld;

namespace {

const char* kSwapScenario = R"({
  "world": {"n": 2, "r0": 10.0, "obstacles": []},
  "k": 2,
  "start": [[-1.0, 0.0], [1.0, 0.0]],
  "goal": [[1.0, 0.0], [-1.0, 0.0]],
  "mode": "strict",
  "seed": 7
})";

Scenario swap_scenario() { return parse_scenario(kSwapScenario); }

Scenario obstacle_scenario() {
  return parse_scenario(R"({
    "world": {"n": 2, "r0": 10.0, "obstacles": [{"center": [3.0, 0.0], "radius": 1.0}]},
    "k": 2,
    "start": [[-5.0, -4.0], [-5.0, -2.0]],
    "goal": [[5.0, -4.0], [5.0, -2.0]],
    "samples_per_segment": 64
  })");
}

Scenario euclidean_scenario() {
  return parse_scenario(R"({
    "euclidean": {"n": 2, "punctures": [[0.0, 0.0]]},
    "k": 1,
    "start": [[0.0, -1.0]],
    "goal": [[5.0, -1.0]],
    "mode": "strict",
    "seed": 3
  })");
}

// Straight-line path sampled as a single segment.
PiecewisePath line_path(const Configuration& a, const Configuration& b, int samples,
                        const std::string& rule = "line") {
  PathSegment seg;
  seg.rule_id = rule;
  seg.label = "line";
  seg.t0 = 0.0;
  seg.t1 = 1.0;
  for (int j = 0; j < samples; ++j) {
    seg.samples.push_back(interpolate(a, b, static_cast<double>(j) / (samples - 1)));
  }
  PiecewisePath path;
  path.segments.push_back(std::move(seg));
  return path;
}

}  // namespace

TEST_CASE("scenario JSON parsing and defaults") {
  const Scenario s = swap_scenario();
  CHECK(s.space.is_sphere_world());
  CHECK(s.k == 2);
  CHECK(s.mode == PlannerMode::kStrict);
  CHECK(s.collar_width_fraction == 0.2);
  CHECK(s.samples_per_segment == 256);
  CHECK(s.seed == 7);

  const Scenario e = euclidean_scenario();
  CHECK_FALSE(e.space.is_sphere_world());
  CHECK(e.space.punctures.size() == 1);

  CHECK_THROWS_AS(parse_scenario("{\"k\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario("not json"), std::invalid_argument);

  // Round trip through the serializer.
  const Scenario back = parse_scenario(scenario_to_json(s));
  CHECK(back.k == s.k);
  CHECK(back.start == s.start);
  CHECK(back.space.world->work_radius == s.space.world->work_radius);
}

TEST_CASE("run_scenario exit codes") {
  CHECK(run_scenario(swap_scenario()).exit_code == kExitOk);
  CHECK(run_scenario(euclidean_scenario()).exit_code == kExitOk);

  Scenario colliding = swap_scenario();
  colliding.start[1] = colliding.start[0];
  CHECK(run_scenario(colliding).exit_code == kExitInvalidConfigurations);

  Scenario outside = swap_scenario();
  outside.goal[0] = {11.0, 0.0};
  CHECK(run_scenario(outside).exit_code == kExitInvalidConfigurations);

  Scenario bad_world = swap_scenario();
  bad_world.space.world->obstacles = {{{-1.0, 0.0}, 1.5}, {{1.0, 0.0}, 1.5}};
  CHECK(run_scenario(bad_world).exit_code == kExitInvalidWorld);

  Scenario bad_fraction = swap_scenario();
  bad_fraction.collar_width_fraction = 0.5;  // shells cannot fit
  CHECK(run_scenario(bad_fraction).exit_code == kExitInvalidWorld);

  Scenario puncture_start = euclidean_scenario();
  puncture_start.start[0] = {0.0, 0.0};
  CHECK(run_scenario(puncture_start).exit_code == kExitInvalidConfigurations);
}

TEST_CASE("run_scenario reports and refinement") {
  const RunResult res = run_scenario(swap_scenario());
  CHECK(res.report.valid);
  CHECK(res.report.endpoints_exact);
  CHECK(res.report.joins_exact);
  CHECK(res.report.min_separation >= 0.4);
  CHECK(res.report.rules_fired.size() == 1);
  CHECK(res.rule_count == 4);
  CHECK(res.samples_per_segment_used >= 256);

  // Boundary-touching start: clearance 0 allowed only at the endpoints.
  Scenario boundary = swap_scenario();
  boundary.start[0] = {10.0, 0.0};
  const RunResult res2 = run_scenario(boundary);
  CHECK(res2.exit_code == kExitOk);
  CHECK(res2.report.min_boundary_clearance > 0.0);
}

TEST_CASE("validator soundness on known-bad paths") {
  const Scenario sc = obstacle_scenario();
  const PlanningSpace& space = sc.space;
  const Configuration a = sc.start;
  const Configuration b = sc.goal;

  PlanningSpace euclid;
  euclid.dim = 2;
  euclid.punctures = {{0.0, 0.0}};

  struct BadCase {
    std::string name;
    PiecewisePath path;
    const PlanningSpace* space;
    Configuration start, goal;
  };
  std::vector<BadCase> bad;
  const auto add_case = [&](std::string name, PiecewisePath path, const PlanningSpace& in,
                            Configuration start, Configuration goal) {
    bad.push_back({std::move(name), std::move(path), &in, std::move(start), std::move(goal)});
  };
  const auto add_world = [&](std::string name, PiecewisePath path) {
    add_case(std::move(name), std::move(path), space, a, b);
  };

  {  // 1: head-on swap, collision sampled exactly at the midpoint.
    const Configuration sa{{-1.0, -3.0}, {1.0, -3.0}};
    const Configuration sb{{1.0, -3.0}, {-1.0, -3.0}};
    add_case("midpoint collision", line_path(sa, sb, 65), space, sa, sb);
    // 2: same swap, collision between samples; the step guard must object.
    add_case("undersampled near collision", line_path(sa, sb, 64), space, sa, sb);
  }
  {  // 3: robot 0 exits the workspace and returns.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[16][0] = {10.5, 0.0};
    add_world("sample outside the workspace", std::move(p));
  }
  {  // 4: robot 0 cuts through the obstacle.
    const Configuration ca{{-5.0, 0.0}, {-5.0, -2.0}};
    const Configuration cb{{5.0, 0.0}, {5.0, -2.0}};
    add_case("pass through an obstacle", line_path(ca, cb, 65), space, ca, cb);
  }
  {  // 5: grazing contact: an interior sample exactly on the obstacle sphere.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[10][0] = {4.0, 0.0};
    add_world("graze the obstacle sphere", std::move(p));
  }
  {  // 6: interior sample on the outer sphere.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[20][1] = {10.0, 0.0};
    add_world("touch the outer sphere mid-path", std::move(p));
  }
  {  // 7: teleporting samples.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[8][0] = add(p.segments[0].samples[8][0], Point{0.0, 5.0});
    add_world("teleport", std::move(p));
  }
  {  // 8: wrong start.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples.front()[0][0] += 1e-9;
    add_world("start endpoint mismatch", std::move(p));
  }
  {  // 9: wrong goal.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples.back()[1][1] -= 1e-9;
    add_world("goal endpoint mismatch", std::move(p));
  }
  {  // 10: segments disagree at the join.
    PiecewisePath p;
    const Configuration mid = interpolate(a, b, 0.5);
    p.segments = line_path(a, mid, 17).segments;
    Configuration mid_off = mid;
    mid_off[0][1] += 1e-6;
    p.segments.push_back(line_path(mid_off, b, 17).segments[0]);
    p.segments[0].t1 = 0.5;
    p.segments[1].t0 = 0.5;
    add_world("join mismatch", std::move(p));
  }
  {  // 11: two robots exactly coincident at one sample.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[12][0] = p.segments[0].samples[12][1];
    add_world("coincident robots", std::move(p));
  }
  {  // 12: a sample hits the puncture exactly, no collision anywhere.
    const Configuration ea{{-1.0, 0.0}, {3.0, 3.0}};
    const Configuration eb{{1.0, 0.0}, {3.0, 4.0}};
    PiecewisePath p = line_path(ea, eb, 65);
    REQUIRE(p.segments[0].samples[32][0] == Point{0.0, 0.0});  // passes through exactly
    add_case("puncture hit", std::move(p), euclid, ea, eb);
  }
  {  // 13: Euclidean head-on swap away from the puncture.
    const Configuration ea{{-1.0, 2.0}, {1.0, 2.0}};
    const Configuration eb{{1.0, 2.0}, {-1.0, 2.0}};
    add_case("euclidean midpoint collision", line_path(ea, eb, 65), euclid, ea, eb);
  }
  {  // 14: a segment with no samples.
    PiecewisePath p = line_path(a, b, 33);
    p.segments.push_back({});
    add_world("empty segment", std::move(p));
  }
  {  // 15: a single-sample segment.
    PiecewisePath p = line_path(a, b, 33);
    PathSegment stub;
    stub.samples.push_back(b);
    p.segments.push_back(stub);
    add_world("one-sample segment", std::move(p));
  }
  {  // 16: malformed sample with a missing robot.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[5].pop_back();
    add_world("missing robot mid-path", std::move(p));
  }
  // 17: start and goal exchanged.
  add_world("reversed endpoints", line_path(b, a, 33));
  {  // 18: robot dips inside the obstacle and out within one segment.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[15][0] = {3.0, 0.5};
    add_world("dip into the obstacle", std::move(p));
  }
  {  // 19: close pair moved with steps larger than half their separation.
    const Configuration ca{{0.0, 0.0}, {0.0, 0.1}};
    const Configuration cb{{4.0, 0.0}, {4.0, 0.1}};
    add_case("guard violation for a close pair", line_path(ca, cb, 9), space, ca, cb);
  }
  {  // 20: the second robot leaves the workspace.
    PiecewisePath p = line_path(a, b, 33);
    p.segments[0].samples[22][1] = {0.0, -10.4};
    add_world("second robot outside", std::move(p));
  }

  REQUIRE(bad.size() == 20);
  for (const BadCase& c : bad) {
    INFO(c.name);
    CHECK_FALSE(validate_path(c.path, *c.space, c.start, c.goal).valid);
  }

  // Known-good straight-line motions are accepted.
  CHECK(validate_path(line_path(a, b, 65), space, a, b).valid);
  CHECK(validate_path(line_path(a, a, 8), space, a, a).valid);
  const Configuration single{{-5.0, 5.0}};
  const Configuration single_goal{{5.0, 5.0}};
  CHECK(validate_path(line_path(single, single_goal, 33), space, single, single_goal).valid);
}

TEST_CASE("path JSON round trip") {
  const RunResult res = run_scenario(swap_scenario());
  const std::string json = path_to_json(res.path, res.report);
  const PiecewisePath back = path_from_json(json);
  REQUIRE(back.segments.size() == res.path.segments.size());
  for (std::size_t s = 0; s < back.segments.size(); ++s) {
    CHECK(back.segments[s].samples == res.path.segments[s].samples);
    CHECK(back.segments[s].rule_id == res.path.segments[s].rule_id);
  }
}

TEST_CASE("determinism: equal scenarios give byte-identical outputs") {
  const RunResult r1 = run_scenario(swap_scenario());
  const RunResult r2 = run_scenario(swap_scenario());
  CHECK(path_to_json(r1.path, r1.report) == path_to_json(r2.path, r2.report));
  CHECK(render_svg(swap_scenario(), r1.path) == render_svg(swap_scenario(), r2.path));
}

TEST_CASE("svg rendering") {
  const Scenario sc = obstacle_scenario();
  const RunResult res = run_scenario(sc);
  REQUIRE(res.exit_code == kExitOk);
  const std::string svg = render_svg(sc, res.path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<circle") != std::string::npos);    // workspace and obstacle
  CHECK(svg.find("<polyline") != std::string::npos);  // robot traces
  CHECK(svg.find("dasharray") != std::string::npos);  // collar shells

  // Degenerate constant path renders markers and degenerate polylines.
  Scenario constant = sc;
  constant.goal = constant.start;
  const RunResult cres = run_scenario(constant);
  CHECK(render_svg(constant, cres.path).find("<polyline") != std::string::npos);

  Scenario spatial = sc;
  spatial.space.dim = 3;
  CHECK_THROWS_AS(render_svg(spatial, res.path), std::invalid_argument);

  // The Euclidean view marks punctures instead of spheres.
  const RunResult eres = run_scenario(euclidean_scenario());
  CHECK(render_svg(euclidean_scenario(), eres.path).find("<circle") != std::string::npos);
}

TEST_CASE("run_and_write creates the two documents with the advertised exit code") {
  const auto dir = std::filesystem::path("harness_out_test");
  std::filesystem::remove_all(dir);
  CHECK(run_and_write(swap_scenario(), dir) == kExitOk);
  CHECK(std::filesystem::exists(dir / "path.json"));
  CHECK(std::filesystem::exists(dir / "report.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("batch runs") {
  const auto dir = std::filesystem::path("batch_in_test");
  const auto out = std::filesystem::path("batch_out_test");
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(out);
  std::filesystem::create_directories(dir);

  {
    std::ofstream(dir / "a_swap.json") << kSwapScenario;
    Scenario bad = swap_scenario();
    bad.start[1] = bad.start[0];
    std::ofstream(dir / "b_bad.json") << scenario_to_json(bad);
    std::ofstream(dir / "c_obstacles.json") << scenario_to_json(obstacle_scenario());
  }

  CHECK(run_batch(dir, out, 2) != 0);
  std::ifstream csv(out / "summary.csv");
  REQUIRE(csv.good());
  std::string header, line;
  std::getline(csv, header);
  CHECK(header.rfind("scenario,", 0) == 0);
  int rows = 0, failures = 0;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.find(",2,") != std::string::npos && line.rfind("b_bad", 0) == 0) ++failures;
  }
  CHECK(rows == 3);
  CHECK(failures == 1);

  // Empty directory: header-only summary, exit 0.
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(run_batch(dir, out, 2) == 0);
  std::ifstream empty_csv(out / "summary.csv");
  std::getline(empty_csv, header);
  CHECK_FALSE(std::getline(empty_csv, line));

  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(out);
}

TEST_CASE("batch over a generated suite of disk scenarios") {
  const auto dir = std::filesystem::path("batch_suite_test");
  const auto out = std::filesystem::path("batch_suite_out");
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(out);
  std::filesystem::create_directories(dir);

  sphereworld::testing::Rng rng(191);
  const SphereWorld disk{2, 10.0, {}};
  for (int i = 0; i < 100; ++i) {
    Scenario sc;
    sc.space.dim = 2;
    sc.space.world = disk;
    sc.k = 2;
    sc.start = sphereworld::testing::random_free_configuration(disk, 2, rng, 0.2, 0.01);
    sc.goal = sphereworld::testing::random_free_configuration(disk, 2, rng, 0.2, 0.01);
    sc.mode = i % 2 == 0 ? PlannerMode::kStrict : PlannerMode::kMerged;
    sc.samples_per_segment = 64;
    char name[32];
    std::snprintf(name, sizeof(name), "s%03d.json", i);
    std::ofstream(dir / name) << scenario_to_json(sc);
  }
  CHECK(run_batch(dir, out, 4) == 0);
  std::ifstream csv(out / "summary.csv");
  std::string line;
  std::getline(csv, line);  // header
  int rows = 0, valid_rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.find(",0,1,") != std::string::npos) ++valid_rows;
  }
  CHECK(rows == 100);
  CHECK(valid_rows == 100);
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(out);
}

TEST_CASE("continuity probe") {
  Scenario sc = swap_scenario();
  sc.samples_per_segment = 64;
  const ContinuityReport strict = probe_continuity(sc, 40, 1e-6);
  CHECK_FALSE(strict.experimental);
  CHECK(strict.rules.size() >= 1);
  for (const RuleContinuity& r : strict.rules) {
    INFO(r.rule_id, " ratio ", r.max_ratio);
    CHECK_FALSE(r.flagged);
  }

  sc.mode = PlannerMode::kMerged;
  const ContinuityReport merged = probe_continuity(sc, 20, 1e-6);
  CHECK(merged.experimental);
  CHECK(merged.tradeoff_ratios.size() == 1);

  Scenario single = euclidean_scenario();
  single.space.punctures.clear();
  single.samples_per_segment = 64;
  const ContinuityReport k1 = probe_continuity(single, 20, 1e-6);
  REQUIRE(k1.rules.size() == 1);
  CHECK(k1.rules.front().max_ratio < 100.0);

  const std::string json = continuity_report_to_json(merged);
  CHECK(json.find("tradeoff_ratios") != std::string::npos);
  CHECK_THROWS_AS(probe_continuity(sc, 0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(probe_continuity(sc, 10, 0.0), std::invalid_argument);
}
