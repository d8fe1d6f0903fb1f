// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "journey/journey.hpp"

namespace {

using namespace journey;

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
    state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

// Dense steps, where the per-destination merge has the most work to split.
void BM_StrictStep(benchmark::State& state) {
    const auto g = gen_uniform(static_cast<std::size_t>(state.range(1)), 16,
                               static_cast<std::size_t>(state.range(1)) * 8, 1);
    RunOptions options;
    options.execution = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(strict_closure(g, options));
    }
    label(state);
}
BENCHMARK(BM_StrictStep)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMicrosecond);

void BM_StaticClosure(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto g = gen_uniform(n, 1, n * 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(static_closure(g.snapshots[0], n, exec_of(state)));
    }
    label(state);
}
BENCHMARK(BM_StaticClosure)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMicrosecond);

void BM_Baseline(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto g = gen_uniform(n, eval_size_expr("sqrtn", n), eval_size_expr("log2n", n), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(baseline_closure(g, Flavor::strict, exec_of(state)));
    }
    label(state);
}
BENCHMARK(BM_Baseline)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMicrosecond);

// Dedicated engine against the baseline strategy on a sparse-per-step stream.
void BM_DedicatedVsBaseline(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto g = gen_uniform(n, eval_size_expr("sqrtn", n), eval_size_expr("log2n", n), 4);
    const bool dedicated = state.range(0) == 0;
    for (auto _ : state) {
        if (dedicated) {
            benchmark::DoNotOptimize(strict_closure(g));
        } else {
            benchmark::DoNotOptimize(baseline_closure(g, Flavor::strict));
        }
    }
    state.SetLabel(dedicated ? "dedicated-strict" : "baseline");
}
BENCHMARK(BM_DedicatedVsBaseline)->ArgsProduct({{0, 1}, {512, 2048}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
