#include <benchmark/benchmark.h>

#include <random>

#include "fjb/kernels.hpp"

using namespace fjb;
using H = numerics::HalfInt;

namespace {

geometry::BlockDecomposition sample_blocks() {
  std::mt19937_64 rng(1);
  return geometry::block_decompose(geometry::HyperboloidChart(4, 4), geometry::random_group_element(4, 4, rng));
}

std::vector<H> g2_targets() {
  std::vector<H> t;
  for (int x2 = 1; x2 <= 31; x2 += 2) t.push_back(H::from_twice(x2));
  return t;
}

void BM_gap_serial(benchmark::State& state) {
  const auto blocks = sample_blocks();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::empirical_gap_min(blocks, state.range(0), 7));
}

void BM_gap_omp(benchmark::State& state) {
  const auto blocks = sample_blocks();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::empirical_gap_min_omp(blocks, state.range(0), 7));
}

void BM_scan_serial(benchmark::State& state) {
  const auto targets = g2_targets();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::scan_targets(4, 4, H::from_int(8), geometry::Subgroup::G2, targets));
}

void BM_scan_omp(benchmark::State& state) {
  const auto targets = g2_targets();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::scan_targets_omp(4, 4, H::from_int(8), geometry::Subgroup::G2, targets));
}

void BM_cosets_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_double_cosets(state.range(0), state.range(0)));
}

void BM_cosets_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_double_cosets_omp(state.range(0), state.range(0)));
}

}  // namespace

BENCHMARK(BM_gap_serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gap_omp)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cosets_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cosets_omp)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
