#include <benchmark/benchmark.h>

#include "mildem/checks.hpp"

using namespace mildem;

namespace {

const char* const kIds[] = {"capSupp", "infiniteCompl", "boxAssoc", "classEqRelation", "operadRoundTrip"};

CheckSpec spec_for(std::int64_t which) {
  CheckSpec s;
  s.id = kIds[which];
  s.trials = 100;
  // smaller exhaustive pool for the round trip
  if (s.id == "operadRoundTrip") s.entry_bound = 5;
  return s;
}

void run(benchmark::State& state, Exec exec) {
  const CheckSpec s = spec_for(state.range(0));
  state.SetLabel(s.id);
  std::size_t items = 0;
  for (auto _ : state) {
    const CheckReport r = run_check(s, exec);
    if (!r.passed()) state.SkipWithError("check failed");
    items += r.instances;
    benchmark::DoNotOptimize(r.failure_count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(items));
}

void BM_Serial(benchmark::State& state) { run(state, Exec::Serial); }
void BM_OpenMP(benchmark::State& state) { run(state, Exec::Parallel); }

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
