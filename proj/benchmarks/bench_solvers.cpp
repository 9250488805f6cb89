#include <benchmark/benchmark.h>

#include <random>

#include "impartial/engine.hpp"
#include "impartial/euclid.hpp"
#include "impartial/moore.hpp"
#include "impartial/wythoff.hpp"

using namespace impartial;

// R(F_{n+1}, F_n) forces n-1 moves, the longest play for numbers of that size.
static void BM_EuclidFibonacci(benchmark::State& state) {
  Integer a = 1, b = 1;
  for (int i = 2; i < state.range(0); ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(euclid::remoteness_euclid({b, a}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EuclidFibonacci)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_EuclidOracleGrid(benchmark::State& state) {
  const auto max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    Solver<euclid::OracleRules> solver{euclid::OracleRules(max)};
    for (std::uint64_t x = 1; x <= max; ++x) {
      for (std::uint64_t y = 1; y <= max; ++y) benchmark::DoNotOptimize(solver.evaluate({x, y}));
    }
  }
}
BENCHMARK(BM_EuclidOracleGrid)->Arg(60)->Arg(200);

static void BM_WythoffTable(benchmark::State& state) {
  for (auto _ : state) {
    wythoff::WythoffTable table({2, 3});
    table.extend_to_index(static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(table.xs().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WythoffTable)->RangeMultiplier(10)->Range(1000, 10'000'000)->Complexity(benchmark::oN);

static void BM_WythoffRemoteness(benchmark::State& state) {
  wythoff::WythoffTable table({1, 1});
  std::mt19937_64 rng(5);
  const auto max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    wythoff::WyPosition p{rng() % max, rng() % max};
    benchmark::DoNotOptimize(wythoff::remoteness_wythoff(p, table));
  }
}
BENCHMARK(BM_WythoffRemoteness)->Arg(1000)->Arg(1'000'000);

static void BM_MooreOracleBox(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    moore::OracleRules rules(n, n - 1, 7);
    Solver<moore::OracleRules> solver(rules);
    SmallPiles top(n);
    for (std::size_t i = 0; i < n; ++i) top[i] = 7;
    benchmark::DoNotOptimize(solver.evaluate(top));
  }
}
BENCHMARK(BM_MooreOracleBox)->DenseRange(2, 4);

// Reduced Vertex Cover instances: remoteness of the Moore position built from
// a fixed random graph with cover size k. Informational; the subset search is
// exponential in min(k, n-k).
static void BM_MooreReducedInstance(benchmark::State& state) {
  std::mt19937_64 rng(9);
  moore::VcInstance inst;
  for (int v = 0; v < 6; ++v) inst.vertices.push_back(std::to_string(v));
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = u + 1; v < 6; ++v) {
      if (rng() % 2) inst.edges.emplace_back(u, v);
    }
  }
  inst.cover_size = static_cast<std::size_t>(state.range(0));
  moore::MoorePosition p = moore::reduce_vertex_cover(inst).position;
  for (auto _ : state) benchmark::DoNotOptimize(moore::remoteness(p));
  state.counters["piles"] = static_cast<double>(p.n());
}
BENCHMARK(BM_MooreReducedInstance)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_MooreMaximalMove(benchmark::State& state) {
  std::mt19937_64 rng(9);
  moore::VcInstance inst;
  for (int v = 0; v < 6; ++v) inst.vertices.push_back(std::to_string(v));
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = u + 1; v < 6; ++v) {
      if (rng() % 2) inst.edges.emplace_back(u, v);
    }
  }
  inst.cover_size = static_cast<std::size_t>(state.range(0));
  moore::MoorePosition p = moore::reduce_vertex_cover(inst).position;
  for (auto _ : state) benchmark::DoNotOptimize(moore::has_maximal_move(p));
}
BENCHMARK(BM_MooreMaximalMove)->DenseRange(1, 6);

BENCHMARK_MAIN();
