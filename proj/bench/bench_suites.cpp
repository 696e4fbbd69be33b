// Serial reference against the OpenMP kernels on the same workloads.
#include <benchmark/benchmark.h>

#include "polypi/rational_paths.hpp"
#include "polypi/suites.hpp"

using namespace polypi;

namespace {

void suite(benchmark::State& state, const char* name, Execution e) {
  SuiteConfig c;
  c.samples = static_cast<std::size_t>(state.range(0));
  c.execution = e;
  c.mesh_levels = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(name, c).rows.size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sweep(benchmark::State& state, int jobs) {
  for (auto _ : state) benchmark::DoNotOptimize(rational_sweep(state.range(0), kDefaultPrecision, jobs).ordered);
}

}  // namespace

BENCHMARK_CAPTURE(suite, chord_compare_serial, "chord-compare", Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, chord_compare_parallel, "chord-compare", Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, projections_serial, "projections", Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, projections_parallel, "projections", Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, circuits_serial, "circuit-sandwich", Execution::Serial)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, circuits_parallel, "circuit-sandwich", Execution::Parallel)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, rational_serial, 1)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, rational_parallel, 0)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
