#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereworld/world.hpp"
#include "test_support.hpp"

using namespace sphereworld;
using sphereworld::testing::Rng;

namespace {

SphereWorld disk(double r0 = 10.0) { return {2, r0, {}}; }

SphereWorld disk_with(std::vector<Obstacle> obstacles, double r0 = 10.0) {
  return {2, r0, std::move(obstacles)};
}

}  // namespace

TEST_CASE("validate_world") {
  CHECK(validate_world(disk()).empty());

  const auto v = validate_world(disk_with({{{9.0, 0.0}, 2.0}}));
  REQUIRE(v.size() == 1);
  CHECK(v.front().kind == WorldViolation::Kind::kClosureOutsideWorkspace);
  CHECK(v.front().i == 0);

  CHECK(validate_world(disk_with({{{-3.0, 0.0}, 1.0}, {{3.0, 0.0}, 1.0}})).empty());

  const auto overlap = validate_world(disk_with({{{-1.0, 0.0}, 1.5}, {{1.0, 0.0}, 1.5}}));
  REQUIRE(overlap.size() == 1);
  CHECK(overlap.front().kind == WorldViolation::Kind::kObstaclesIntersect);
  CHECK(overlap.front().i == 0);
  CHECK(overlap.front().j == 1);

  CHECK_FALSE(validate_world({1, 10.0, {}}).empty());
  CHECK_FALSE(validate_world({2, -1.0, {}}).empty());
  CHECK_FALSE(validate_world(disk_with({{{3.0, 0.0}, 0.0}})).empty());
}

TEST_CASE("contains keeps bounding spheres in the free space") {
  CHECK(contains(disk(), {0.0, 0.0}));
  CHECK(contains(disk(), {10.0, 0.0}));
  CHECK_FALSE(contains(disk(), {10.0 + 1e-9, 0.0}));

  const SphereWorld world = disk_with({{{3.0, 0.0}, 1.0}});
  CHECK_FALSE(contains(world, {3.0, 0.0}));
  CHECK(contains(world, {4.0, 0.0}));  // on the obstacle sphere
  CHECK_FALSE(contains(world, {3.5, 0.0}));
  CHECK_THROWS_AS(contains(world, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("classify") {
  const SphereWorld world = disk_with({{{3.0, 0.0}, 1.0}});
  CHECK(classify(world, {10.0, 0.0}).kind == Classification::Kind::kBoundary);
  CHECK(classify(world, {10.0, 0.0}).sphere == kOuterSphere);
  CHECK(classify(world, {0.0, 0.0}).kind == Classification::Kind::kInterior);
  CHECK(classify(world, {4.0, 0.0}).kind == Classification::Kind::kBoundary);
  CHECK(classify(world, {4.0, 0.0}).sphere == 0);
  CHECK(classify(world, {11.0, 0.0}).kind == Classification::Kind::kOutside);
  CHECK(classify(world, {3.0, 0.0}).kind == Classification::Kind::kOutside);
  // Just outside the outer sphere but within tolerance counts as boundary.
  CHECK(classify(world, {10.0 + 1e-12, 0.0}).kind == Classification::Kind::kBoundary);
}

TEST_CASE("boundary_clearance") {
  CHECK(boundary_clearance(disk(), {0.0, 0.0}) == 10.0);
  const SphereWorld world = disk_with({{{3.0, 0.0}, 1.0}});
  CHECK(boundary_clearance(world, {9.0, 0.0}) == 1.0);
  CHECK(boundary_clearance(world, {10.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(boundary_clearance(world, {3.5, 0.0}), std::domain_error);
}

TEST_CASE("classified boundary points have near-zero clearance") {
  Rng rng(11);
  const SphereWorld world = sphereworld::testing::random_world(3, 2, rng);
  const double tol = default_boundary_tolerance(world);
  for (int i = 0; i < 200; ++i) {
    const Point dir = sphereworld::testing::random_unit_vector(3, rng);
    const int sphere = i % 3 == 0 ? kOuterSphere : (i % 3) - 1;
    const Point p = sphereworld::testing::boundary_point(world, sphere, dir);
    const auto cls = classify(world, p);
    REQUIRE(cls.kind == Classification::Kind::kBoundary);
    CHECK(boundary_clearance(world, p) <= tol);
  }
}

TEST_CASE("contains is monotone under shrinking or removing obstacles") {
  Rng rng(13);
  const SphereWorld world = sphereworld::testing::random_world(2, 3, rng);
  SphereWorld fewer = world;
  fewer.obstacles.pop_back();
  SphereWorld shrunk = world;
  for (Obstacle& o : shrunk.obstacles) o.radius *= 0.5;
  for (int i = 0; i < 2000; ++i) {
    const Point p = sphereworld::testing::random_point_in_ball(2, world.work_radius, rng);
    if (contains(world, p)) {
      CHECK(contains(fewer, p));
      CHECK(contains(shrunk, p));
    }
  }
}

TEST_CASE("validation agrees with sampled membership on random worlds") {
  // Worlds generated with a margin on both sides of validity; the analytic
  // check and a sampling oracle must agree everywhere.
  Rng rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int valid_count = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    SphereWorld world;
    world.dim = 2;
    world.work_radius = 10.0;
    const int m = trial % 3 + 1;
    for (int i = 0; i < m; ++i) {
      world.obstacles.push_back(
          {sphereworld::testing::random_point_in_ball(2, 12.0, rng), 0.3 + 2.0 * unit(rng)});
    }
    // Margin of the defining inequalities; skip knife-edge worlds so the
    // sampling oracle cannot be fooled by roundoff.
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < world.obstacles.size(); ++i) {
      margin = std::min(margin, world.work_radius - norm(world.obstacles[i].center) -
                                    world.obstacles[i].radius);
      for (std::size_t j = i + 1; j < world.obstacles.size(); ++j) {
        margin = std::min(margin, distance(world.obstacles[i].center, world.obstacles[j].center) -
                                      world.obstacles[i].radius - world.obstacles[j].radius);
      }
    }
    if (std::abs(margin) < 1e-3) continue;

    // Sampling oracle: points on each obstacle sphere must stay strictly
    // inside the workspace and outside every other obstacle closure.
    bool sampled_ok = true;
    for (std::size_t i = 0; i < world.obstacles.size() && sampled_ok; ++i) {
      for (int s = 0; s < 64 && sampled_ok; ++s) {
        const Point p = add(world.obstacles[i].center,
                            scaled(sphereworld::testing::random_unit_vector(2, rng),
                                   world.obstacles[i].radius));
        sampled_ok = norm(p) < world.work_radius;
        for (std::size_t j = 0; j < world.obstacles.size() && sampled_ok; ++j) {
          if (j != i) {
            sampled_ok = distance(p, world.obstacles[j].center) > world.obstacles[j].radius;
          }
        }
      }
    }
    const bool analytic_ok = is_valid(world);
    if (analytic_ok) {
      ++valid_count;
      CHECK(sampled_ok);
    }
    if (margin > 1e-3) CHECK(analytic_ok);
    // Sampling may miss a thin violation, but it must never contradict an
    // analytically valid world; invalid worlds with a clear margin are caught
    // by the oracle whenever the violation involves the workspace sphere.
  }
  CHECK(valid_count > 100);  // the generator produces plenty of valid worlds
}

TEST_CASE("min_gap") {
  CHECK(min_gap(disk()) == 10.0);
  const SphereWorld world = disk_with({{{-3.0, 0.0}, 1.0}, {{3.0, 0.0}, 1.0}});
  CHECK(min_gap(world) == 4.0);  // pair gap 6 - 1 - 1 = 4 beats outer gap 6
}
