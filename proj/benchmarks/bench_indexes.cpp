#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>

#include "divindex/analysis.hpp"
#include "divindex/decomp.hpp"
#include "divindex/indexes.hpp"
#include "divindex/spatial.hpp"

namespace {

using namespace divindex;

// Units on a sqrt(N) x sqrt(N) grid with 4 groups and 20 districts.
UnitTable make_table(std::size_t n, unsigned seed = 42) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> count(0.0, 1000.0);
  const std::size_t side = static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) + 1;
  std::vector<UnitRecord> units;
  units.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    UnitRecord u;
    u.id = "u" + std::to_string(i);
    u.counts = {count(rng), count(rng), count(rng), count(rng)};
    u.district = "d" + std::to_string(i % 20);
    u.location = Point{static_cast<double>(i % side), static_cast<double>(i / side)};
    units.push_back(std::move(u));
  }
  return UnitTable(GroupSet({"a", "b", "c", "d"}), std::move(units));
}

void BM_DivergenceOverall(benchmark::State& state) {
  const auto table = make_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(divergence_overall(table));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DivergenceOverall)->Arg(1000)->Arg(100000);

void BM_InfoTheoryOverall(benchmark::State& state) {
  const auto table = make_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(info_theory_overall(table));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InfoTheoryOverall)->Arg(1000)->Arg(100000);

void BM_DecomposeDivergence(benchmark::State& state) {
  const auto table = make_table(static_cast<std::size_t>(state.range(0)));
  const auto h = Hierarchy::from_table(table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_divergence(table, h));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecomposeDivergence)->Arg(1000)->Arg(100000);

void BM_UniformKernelSmoothing(benchmark::State& state) {
  const auto table = make_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto w = uniform_kernel(table, 2.0);
    benchmark::DoNotOptimize(spatially_weighted_table(table, w));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UniformKernelSmoothing)->Arg(1000)->Arg(10000);

void BM_CorrelateRegions(benchmark::State& state) {
  std::vector<NamedRegion> regions;
  for (int r = 0; r < 50; ++r) {
    regions.push_back({"r" + std::to_string(r), make_table(500, static_cast<unsigned>(r))});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlate_regions(regions, IndexPair{}));
  }
}
BENCHMARK(BM_CorrelateRegions);

}  // namespace

BENCHMARK_MAIN();
