#include "sphereworld/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sphereworld/collar.hpp"

namespace sphereworld {

namespace {

const char* kRobotColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

// Fixed-precision formatting keeps the document byte-stable.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void circle(std::ostringstream& out, double cx, double cy, double r, const std::string& style) {
  out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r) << "\" "
      << style << "/>\n";
}

}  // namespace

std::string render_svg(const Scenario& scenario, const PiecewisePath& path) {
  if (scenario.space.dim != 2) {
    throw std::invalid_argument("svg rendering is only defined for two-dimensional spaces");
  }

  // World extent; for punctured Euclidean scenarios use the data extent.
  double extent = 1.0;
  if (scenario.space.is_sphere_world()) {
    extent = scenario.space.world->work_radius;
  } else {
    const auto grow = [&extent](const Point& p) {
      extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
    };
    for (const Point& q : scenario.space.punctures) grow(q);
    for (const PathSegment& seg : path.segments) {
      for (const Configuration& c : seg.samples) {
        for (const Point& p : c) grow(p);
      }
    }
  }
  const double margin = 0.08 * extent;
  const double half = extent + margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
      << fmt(-half) << " " << fmt(-half) << " " << fmt(2 * half) << " " << fmt(2 * half)
      << "\">\n";
  // Flip the y axis so the drawing uses the usual mathematical orientation.
  out << " <g transform=\"scale(1,-1)\">\n";

  const double stroke = 0.004 * half;
  if (scenario.space.is_sphere_world()) {
    const SphereWorld& world = *scenario.space.world;
    circle(out, 0, 0, world.work_radius,
           "fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fmt(2 * stroke) + "\"");
    const CollarAtlas atlas = CollarAtlas::build(world, scenario.collar_width_fraction);
    const std::string dashed = "fill=\"none\" stroke=\"#888888\" stroke-width=\"" + fmt(stroke) +
                               "\" stroke-dasharray=\"" + fmt(8 * stroke) + " " + fmt(8 * stroke) +
                               "\"";
    circle(out, 0, 0, world.work_radius - 2.0 * atlas.outer_width(), dashed);
    for (int i = 0; i < static_cast<int>(world.obstacles.size()); ++i) {
      const Obstacle& o = world.obstacles[i];
      circle(out, o.center[0], o.center[1], o.radius, "fill=\"#bbbbbb\" stroke=\"none\"");
      circle(out, o.center[0], o.center[1], o.radius + 2.0 * atlas.obstacle_width(i), dashed);
    }
  } else {
    for (const Point& q : scenario.space.punctures) {
      circle(out, q[0], q[1], 2.5 * stroke, "fill=\"#000000\" stroke=\"none\"");
      circle(out, q[0], q[1], 6 * stroke,
             "fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fmt(stroke) + "\"");
    }
  }

  const int k = scenario.k;
  for (int robot = 0; robot < k; ++robot) {
    const std::string color = kRobotColors[robot % (sizeof(kRobotColors) / sizeof(char*))];
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(stroke)
        << "\" points=\"";
    bool first = true;
    for (const PathSegment& seg : path.segments) {
      for (const Configuration& c : seg.samples) {
        if (!first) out << " ";
        out << fmt(c[robot][0]) << "," << fmt(c[robot][1]);
        first = false;
      }
    }
    out << "\"/>\n";
    if (!path.segments.empty()) {
      const Point& s = path.start()[robot];
      const Point& g = path.end()[robot];
      circle(out, s[0], s[1], 3 * stroke, "fill=\"" + color + "\" stroke=\"none\"");
      out << "  <rect x=\"" << fmt(g[0] - 3 * stroke) << "\" y=\"" << fmt(g[1] - 3 * stroke)
          << "\" width=\"" << fmt(6 * stroke) << "\" height=\"" << fmt(6 * stroke) << "\" fill=\"none\" stroke=\""
          << color << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }
  }

  out << " </g>\n</svg>\n";
  return out.str();
}

}  // namespace sphereworld
