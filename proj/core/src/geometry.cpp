#include "sphereworld/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphereworld {

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

}  // namespace

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point add(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scaled(const Point& a, double s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Point lerp(const Point& a, const Point& b, double t) {
  require_same_dim(a, b);
  Point r(a.size());
  const double u = 1.0 - t;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = u * a[i] + t * b[i];
  return r;
}

std::vector<double> convex_combination(const std::vector<double>& x,
                                       const std::vector<double>& y, double t) {
  return lerp(x, y, t);
}

bool all_finite(const Point& a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double segment_point_distance(const Point& a, const Point& b, const Point& q,
                              double* s_at_min) {
  const Point d = sub(b, a);
  const double len2 = dot(d, d);
  double s = 0.0;
  if (len2 > 0.0) {
    s = std::clamp(dot(sub(q, a), d) / len2, 0.0, 1.0);
  }
  if (s_at_min != nullptr) *s_at_min = s;
  return distance(lerp(a, b, s), q);
}

}  // namespace sphereworld
