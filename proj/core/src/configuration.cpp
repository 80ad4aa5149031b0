#include "sphereworld/configuration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sphereworld {

bool pairwise_distinct(const Configuration& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j]) return false;
    }
  }
  return true;
}

bool in_free_configuration_space(const SphereWorld& world, const Configuration& c) {
  for (const Point& p : c) {
    if (!contains(world, p)) return false;
  }
  return pairwise_distinct(c);
}

double min_pairwise_distance(const Configuration& c) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      best = std::min(best, distance(c[i], c[j]));
    }
  }
  return best;
}

double separation(const Configuration& c) {
  if (!pairwise_distinct(c)) {
    throw std::domain_error("separation: configuration has coincident points");
  }
  return min_pairwise_distance(c);
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Configuration permute(const Configuration& c, const Permutation& sigma) {
  if (sigma.size() != c.size() || !is_permutation(sigma)) {
    throw std::invalid_argument("permute: not a permutation of the configuration's slots");
  }
  Configuration out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[sigma[i]] = c[i];
  return out;
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size() || !is_permutation(tau) || !is_permutation(sigma)) {
    throw std::invalid_argument("compose: arguments must be permutations of equal degree");
  }
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = tau[sigma[i]];
  return out;
}

Configuration project(const Configuration& c, int r) {
  if (r < 1 || r >= static_cast<int>(c.size())) {
    throw std::invalid_argument("project: need 1 <= r < k");
  }
  return Configuration(c.begin(), c.begin() + r);
}

Configuration interpolate(const Configuration& a, const Configuration& b, double t) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("interpolate: configurations differ in size");
  }
  Configuration out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lerp(a[i], b[i], t);
  return out;
}

}  // namespace sphereworld
