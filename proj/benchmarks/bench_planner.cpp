#include <benchmark/benchmark.h>

#include <random>

#include "sphereworld/transport.hpp"
#include "sphereworld/validation.hpp"

using namespace sphereworld;

namespace {

Configuration bench_configuration(const SphereWorld& world, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    Configuration c(k, Point(world.dim));
    for (Point& p : c) {
      do {
        for (double& x : p) x = unit(rng) * world.work_radius;
      } while (!contains(world, p) || boundary_clearance(world, p) < 0.2);
    }
    if (min_pairwise_distance(c) > 0.01) return c;
  }
}

void BM_SpreadPlan(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Planner planner = spread_planner(2, k, PlannerMode::kStrict);
  std::mt19937_64 rng(7);
  const SphereWorld box{2, 10.0, {}};
  const Configuration a = bench_configuration(box, k, rng);
  const Configuration b = bench_configuration(box, k, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner.plan(a, b));
  }
}
BENCHMARK(BM_SpreadPlan)->Arg(2)->Arg(4)->Arg(8);

void BM_TransportedPlan(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SphereWorld world{2, 10.0, {}};
  Point c1{3.0, 0.0}, c2{-3.0, 2.0};
  world.obstacles = {{c1, 1.0}, {c2, 1.2}};
  const TransportedPlanner planner(world, k, PlannerMode::kStrict);
  std::mt19937_64 rng(11);
  const Configuration a = bench_configuration(world, k, rng);
  const Configuration b = bench_configuration(world, k, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner.plan(a, b));
  }
}
BENCHMARK(BM_TransportedPlan)->Arg(2)->Arg(4);

void BM_ValidatePath(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SphereWorld world{2, 10.0, {}};
  const TransportedPlanner planner(world, k, PlannerMode::kStrict);
  std::mt19937_64 rng(13);
  const Configuration a = bench_configuration(world, k, rng);
  const Configuration b = bench_configuration(world, k, rng);
  const PiecewisePath path = planner.plan(a, b);
  PlanningSpace space;
  space.dim = 2;
  space.world = world;
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_path(path, space, a, b));
  }
}
BENCHMARK(BM_ValidatePath)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
