// Serial reference vs OpenMP kernel for batched distance evaluation.

#include <benchmark/benchmark.h>

#include <random>

#include "evidist/batch.hpp"
#include "evidist/experiments.hpp"
#include "oracles.hpp"

namespace {

std::vector<evidist::BpaPair> make_pairs(std::size_t count, std::size_t frame_size, std::size_t focal) {
  std::mt19937_64 rng(77);
  std::vector<evidist::BpaPair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto f = evidist::oracle::random_frame(rng, frame_size);
    pairs.push_back({evidist::oracle::random_bpa(rng, f, focal), evidist::oracle::random_bpa(rng, f, focal)});
  }
  return pairs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)), 20, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evidist::batch_distances_serial(pairs, {}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)), 20, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evidist::batch_distances_parallel(pairs, {}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = evidist::parallel_threads();
}

void BM_SweepGrowing(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? evidist::Execution::Serial : evidist::Execution::Parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evidist::run_sweep(evidist::SweepKind::Growing, {}, exec));
  }
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_BatchParallel)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_SweepGrowing)->Arg(0)->Arg(1)->UseRealTime();

BENCHMARK_MAIN();
