#pragma once

#include <vector>

#include "sphereworld/geometry.hpp"
#include "sphereworld/world.hpp"

namespace sphereworld {

// Ordered tuple of k labelled points, pairwise distinct. Distinctness is
// exact equality of coordinate vectors; separation margins are queries that
// consumers opt into, never an invariant of the value itself.
using Configuration = std::vector<Point>;

// sigma[i] is the slot that the point in slot i moves to.
using Permutation = std::vector<int>;

bool pairwise_distinct(const Configuration& c);

// Every point inside the free space and all pairs distinct.
bool in_free_configuration_space(const SphereWorld& world, const Configuration& c);

// Minimum pairwise distance; +infinity for a single point. Throws when two
// points coincide exactly (the configuration is outside the space).
double separation(const Configuration& c);

// Same minimum but total: coincident points yield 0. Validation helper.
double min_pairwise_distance(const Configuration& c);

bool is_permutation(const Permutation& sigma);

Configuration permute(const Configuration& c, const Permutation& sigma);

// (tau o sigma)[i] = tau[sigma[i]], so permute(permute(c, sigma), tau) equals
// permute(c, compose(tau, sigma)).
Permutation compose(const Permutation& tau, const Permutation& sigma);

// First r points, 1 <= r < k.
Configuration project(const Configuration& c, int r);

// Pointwise lerp; exact at t = 0 and t = 1.
Configuration interpolate(const Configuration& a, const Configuration& b, double t);

}  // namespace sphereworld
