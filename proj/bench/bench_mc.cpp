#include <benchmark/benchmark.h>

#include <omp.h>

#include "ginar/mc_harness.hpp"

using namespace ginar;

namespace {

CellSpec bench_cell(std::size_t n, std::size_t reps) {
    return CellSpec{0.3, 0.1, n, reps, 1000, 0.05, cell_seed(1, 0.3, 0.1, n)};
}

void BM_CellSerial(benchmark::State& state) {
    const CellSpec cell = bench_cell(static_cast<std::size_t>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(run_cell_serial(cell));
    state.SetItemsProcessed(state.iterations() * cell.replications);
}

void BM_CellParallel(benchmark::State& state) {
    const CellSpec cell = bench_cell(static_cast<std::size_t>(state.range(0)), 64);
    state.counters["threads"] = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(run_cell(cell));
    state.SetItemsProcessed(state.iterations() * cell.replications);
}

void BM_Simulate(benchmark::State& state) {
    const GinarModel model({BerG(0.3, 0.1)}, Poisson(1.0));
    const SimConfig config{static_cast<std::size_t>(state.range(0)), 1000, 9};
    for (auto _ : state) benchmark::DoNotOptimize(simulate(model, config));
}

void BM_RunTest(benchmark::State& state) {
    const GinarModel model({Bernoulli(0.3)}, Poisson(1.0));
    const CountSeries series = simulate(model, SimConfig{static_cast<std::size_t>(state.range(0)), 1000, 9});
    const NullSpec null = bernoulli_poisson_null();
    for (auto _ : state) benchmark::DoNotOptimize(run_test(series, 1, null, 0.05));
}

}  // namespace

BENCHMARK(BM_CellSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Simulate)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RunTest)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
