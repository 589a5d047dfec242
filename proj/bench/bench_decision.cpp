// Serial reference sweep vs the OpenMP sweep on the same decisions.

#include <benchmark/benchmark.h>

#include "lieab/corpus.hpp"
#include "lieab/decision.hpp"

namespace {

const char* const kSpecs[] = {"g5_6", "cnla7", "filiform_q6", "borel:3"};

void run(benchmark::State& state, lieab::ExecutionPolicy policy) {
  const lieab::LieAlgebra g = lieab::family(kSpecs[state.range(0)]);
  lieab::DecisionOptions o;
  o.policy = policy;
  for (auto _ : state) {
    const lieab::InvariantReport r = lieab::compute_invariants(g, o);
    benchmark::DoNotOptimize(r.alpha);
  }
  state.SetLabel(kSpecs[state.range(0)]);
}

void BM_Serial(benchmark::State& state) { run(state, lieab::ExecutionPolicy::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, lieab::ExecutionPolicy::Parallel); }

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
