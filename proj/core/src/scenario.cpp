#include "sphereworld/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sphereworld {

using nlohmann::json;

namespace {

Point point_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be a JSON array of numbers");
  Point p;
  p.reserve(j.size());
  for (const auto& v : j) p.push_back(v.get<double>());
  return p;
}

Configuration configuration_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("configuration must be a JSON array of points");
  Configuration c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(point_from(v));
  return c;
}

json to_json(const Point& p) { return json(p); }

json to_json(const Configuration& c) {
  json j = json::array();
  for (const Point& p : c) j.push_back(to_json(p));
  return j;
}

// NaN and infinity have no JSON literal; report minima use null there.
json finite_or_null(double v) {
  if (std::isfinite(v)) return json(v);
  return json(nullptr);
}

json report_body(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid;
  j["min_separation"] = finite_or_null(r.min_separation);
  j["min_boundary_clearance"] = finite_or_null(r.min_boundary_clearance);
  j["min_puncture_clearance"] = finite_or_null(r.min_puncture_clearance);
  j["max_step"] = finite_or_null(r.max_step);
  j["step_guard_ratio"] = finite_or_null(r.step_guard_ratio);
  j["step_guard_ok"] = r.step_guard_ok;
  j["endpoints_exact"] = r.endpoints_exact;
  j["joins_exact"] = r.joins_exact;
  j["rules_fired"] = r.rules_fired;
  j["issues"] = r.issues;
  return j;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
  }

  Scenario s;
  if (j.contains("world")) {
    const json& w = j.at("world");
    SphereWorld world;
    world.dim = w.at("n").get<int>();
    world.work_radius = w.at("r0").get<double>();
    if (w.contains("obstacles")) {
      for (const auto& o : w.at("obstacles")) {
        world.obstacles.push_back({point_from(o.at("center")), o.at("radius").get<double>()});
      }
    }
    s.space.dim = world.dim;
    s.space.world = std::move(world);
  } else if (j.contains("euclidean")) {
    const json& e = j.at("euclidean");
    s.space.dim = e.at("n").get<int>();
    if (e.contains("punctures")) {
      for (const auto& q : e.at("punctures")) s.space.punctures.push_back(point_from(q));
    }
  } else {
    throw std::invalid_argument("scenario needs either a 'world' or a 'euclidean' space");
  }

  s.k = j.at("k").get<int>();
  s.start = configuration_from(j.at("start"));
  s.goal = configuration_from(j.at("goal"));
  if (j.contains("mode")) s.mode = planner_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("collar_width_fraction")) {
    s.collar_width_fraction = j.at("collar_width_fraction").get<double>();
  }
  if (j.contains("samples_per_segment")) {
    s.samples_per_segment = j.at("samples_per_segment").get<int>();
  }
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open scenario file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  if (s.space.is_sphere_world()) {
    json w;
    w["n"] = s.space.world->dim;
    w["r0"] = s.space.world->work_radius;
    json obstacles = json::array();
    for (const Obstacle& o : s.space.world->obstacles) {
      obstacles.push_back({{"center", to_json(o.center)}, {"radius", o.radius}});
    }
    w["obstacles"] = obstacles;
    j["world"] = w;
  } else {
    json e;
    e["n"] = s.space.dim;
    json punctures = json::array();
    for (const Point& q : s.space.punctures) punctures.push_back(to_json(q));
    e["punctures"] = punctures;
    j["euclidean"] = e;
  }
  j["k"] = s.k;
  j["start"] = to_json(s.start);
  j["goal"] = to_json(s.goal);
  j["mode"] = to_string(s.mode);
  j["collar_width_fraction"] = s.collar_width_fraction;
  j["samples_per_segment"] = s.samples_per_segment;
  j["seed"] = s.seed;
  return j.dump(2) + "\n";
}

std::string path_to_json(const PiecewisePath& path, const ValidationReport& report) {
  json j;
  json segments = json::array();
  for (const PathSegment& seg : path.segments) {
    json js;
    js["rule_id"] = seg.rule_id;
    js["label"] = seg.label;
    js["t0"] = seg.t0;
    js["t1"] = seg.t1;
    json samples = json::array();
    for (const Configuration& c : seg.samples) samples.push_back(to_json(c));
    js["samples"] = samples;
    segments.push_back(js);
  }
  j["segments"] = segments;
  j["report"] = report_body(report);
  return j.dump() + "\n";
}

PiecewisePath path_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("path is not valid JSON: ") + e.what());
  }
  PiecewisePath path;
  for (const auto& js : j.at("segments")) {
    PathSegment seg;
    seg.rule_id = js.at("rule_id").get<std::string>();
    if (js.contains("label")) seg.label = js.at("label").get<std::string>();
    seg.t0 = js.at("t0").get<double>();
    seg.t1 = js.at("t1").get<double>();
    for (const auto& sample : js.at("samples")) seg.samples.push_back(configuration_from(sample));
    path.segments.push_back(std::move(seg));
  }
  return path;
}

std::string report_to_json(const ValidationReport& report, double plan_ms, double validate_ms,
                           int samples_per_segment_used) {
  json j = report_body(report);
  j["timings"] = {{"plan_ms", plan_ms}, {"validate_ms", validate_ms}};
  j["samples_per_segment_used"] = samples_per_segment_used;
  return j.dump(2) + "\n";
}

std::string configuration_to_json(const Configuration& c) { return to_json(c).dump() + "\n"; }

Configuration configuration_from_json(const std::string& json_text) {
  return configuration_from(json::parse(json_text));
}

std::string points_to_json(const std::vector<Point>& points) {
  json j = json::array();
  for (const Point& p : points) j.push_back(to_json(p));
  return j.dump() + "\n";
}

std::vector<Point> points_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from(p));
  return out;
}

}  // namespace sphereworld
