// Soft performance checks: solve_leq_rect should scale like sorting, so
// doubling the tile count should cost well under ~2.5x.
#include <benchmark/benchmark.h>

#include <random>

#include "edgematch/order_solvers.hpp"

using namespace edgematch;

namespace {

std::vector<SquareTile> random_tiles(int count, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> d(0, 9999);
  std::vector<SquareTile> tiles;
  tiles.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    tiles.push_back({i, Label::num(d(eng)), Label::num(d(eng)), Label::num(d(eng)),
                     Label::num(d(eng))});
  return tiles;
}

} // namespace

static void BM_SolveLeqRect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto tiles = random_tiles(n * n, 42);
  for (auto _ : state) {
    auto sol = order_solvers::solve_leq_rect(n, n, tiles);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_SolveLeqRect)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNLogN);

static void BM_SolveLtStrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto tiles = random_tiles(n, 43);
  for (auto& t : tiles)
    if (t.west == t.east && t.north == t.south) t.west = Label::num(t.east.value + 1);
  for (auto _ : state) {
    auto sol = order_solvers::solve_lt_strip(tiles);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveLtStrip)->RangeMultiplier(2)->Range(64, 16384)->Complexity(benchmark::oNLogN);

BENCHMARK_MAIN();
