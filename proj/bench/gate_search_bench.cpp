// Serial reference vs OpenMP kernel for counterexample_search.

#include <benchmark/benchmark.h>

#include "semistable/gate.hpp"

namespace {

semistable::SearchConfig config(unsigned s_max, std::uint64_t ell_max) {
  semistable::SearchConfig cfg;
  cfg.q = 2;
  cfg.degrees = {2, 4};
  cfg.s_max = s_max;
  cfg.ell_max = ell_max;
  return cfg;
}

void BM_Serial(benchmark::State& state) {
  const auto cfg = config(static_cast<unsigned>(state.range(0)), static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(semistable::counterexample_search_serial(cfg));
  state.counters["instances"] = static_cast<double>(semistable::corpus_size(cfg));
}

void BM_Parallel(benchmark::State& state) {
  const auto cfg = config(static_cast<unsigned>(state.range(0)), static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(semistable::counterexample_search(cfg));
  state.counters["instances"] = static_cast<double>(semistable::corpus_size(cfg));
}

}  // namespace

BENCHMARK(BM_Serial)->Args({2, 200})->Args({3, 400})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Args({2, 200})->Args({3, 400})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
