#pragma once

#include <cstddef>
#include <vector>

namespace sphereworld {

// A point of R^n. The ambient dimension is runtime data; every routine in
// the library is n-generic.
using Point = std::vector<double>;

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scaled(const Point& a, double s);

// (1-t)*a + t*b, evaluated so that t=0 returns a and t=1 returns b exactly.
Point lerp(const Point& a, const Point& b, double t);

// Elementwise (1-t)*x + t*y on equal-length scalar tuples. If x and y are
// both strictly increasing then so is the combination for every t in [0,1].
std::vector<double> convex_combination(const std::vector<double>& x,
                                       const std::vector<double>& y, double t);

bool all_finite(const Point& a);
bool lex_less(const Point& a, const Point& b);

// Distance from q to the segment a->b. When s_at_min is non-null it receives
// the segment parameter in [0,1] of the closest point.
double segment_point_distance(const Point& a, const Point& b, const Point& q,
                              double* s_at_min = nullptr);

}  // namespace sphereworld
