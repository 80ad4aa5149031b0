#include <benchmark/benchmark.h>

#include <random>

#include "sphereworld/collar.hpp"
#include "sphereworld/puncture_map.hpp"

using namespace sphereworld;

namespace {

SphereWorld bench_world(int dim) {
  SphereWorld world;
  world.dim = dim;
  world.work_radius = 10.0;
  Point c1(dim, 0.0), c2(dim, 0.0);
  c1[0] = 3.0;
  c2[0] = -3.0;
  c2[1] = 2.0;
  world.obstacles = {{c1, 1.0}, {c2, 1.2}};
  return world;
}

std::vector<Point> bench_points(const SphereWorld& world, std::size_t count) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Point> points;
  while (points.size() < count) {
    Point p(world.dim);
    for (double& x : p) x = unit(rng) * world.work_radius;
    if (contains(world, p) && boundary_clearance(world, p) > 1e-6) points.push_back(std::move(p));
  }
  return points;
}

void BM_Retract(benchmark::State& state) {
  const SphereWorld world = bench_world(static_cast<int>(state.range(0)));
  const CollarAtlas atlas = CollarAtlas::build(world);
  const auto points = bench_points(world, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(atlas.retract(points[i++ & 1023]));
  }
}
BENCHMARK(BM_Retract)->Arg(2)->Arg(3)->Arg(5);

void BM_PunctureRoundTrip(benchmark::State& state) {
  const SphereWorld world = bench_world(static_cast<int>(state.range(0)));
  const PunctureMap map = PunctureMap::from_atlas(CollarAtlas::build(world));
  const auto points = bench_points(world, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.inverse(map.forward(points[i++ & 1023])));
  }
}
BENCHMARK(BM_PunctureRoundTrip)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
