#include <benchmark/benchmark.h>

#include "invitelab/experiments.hpp"

using namespace invitelab;

namespace {

ModelParams example1(double r = 1000) {
    return {.lambda = 1, .alpha = 0.7, .beta = 1, .mu = 1, .gamma = 2, .epsilon = 1.5, .r = r};
}

void BM_SimulateExample1(benchmark::State& state) {
    const ModelParams p = example1(static_cast<double>(state.range(0)));
    const SimConfig cfg{.seed = 99, .t_end = 1.0, .sample_dt = 0.01};
    std::uint64_t events = 0;
    std::uint32_t rep = 0;
    for (auto _ : state) {
        const SimResult res = simulate_run({0, 0, 0}, p, cfg, rep++);
        for (const auto c : res.event_counts) events += c;
        benchmark::DoNotOptimize(res.trajectory.states.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(events));
}
BENCHMARK(BM_SimulateExample1)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FluidIntegrateExample1(benchmark::State& state) {
    const ModelParams p = example1();
    const FluidState init = scale_center({0, -1000, 0}, p);
    const FluidConfig cfg{.dt = 1e-3, .t_end = 10.0};
    for (auto _ : state) {
        const FluidRun run = integrate(init, p, cfg);
        benchmark::DoNotOptimize(run.verdict.min_norm);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_FluidIntegrateExample1)->Unit(benchmark::kMillisecond);

void BM_CubicRoots(benchmark::State& state) {
    const CubicPoly c = product_char_poly(example1());
    for (auto _ : state) {
        const auto roots = cubic_roots(c);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_CubicRoots);

void BM_Classify(benchmark::State& state) {
    const ModelParams p = example1();
    for (auto _ : state) {
        const StabilityReport rep = classify(p);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
