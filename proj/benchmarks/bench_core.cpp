#include <benchmark/benchmark.h>

#include "memdyn/attractor.hpp"
#include "memdyn/simulate.hpp"

using namespace memdyn;

namespace {

MemristorModel biolek_linear() {
    return {WindowSpec::biolek(1), Activation::linear(1.0), {}, {}};
}

}  // namespace

static void BM_StateRate(benchmark::State& state) {
    const auto m = biolek_linear();
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(state_rate(m, x, 0.05));
        x = x < 0.7 ? x + 1e-9 : 0.3;
    }
}
BENCHMARK(BM_StateRate);

static void BM_IntegratePeriods(benchmark::State& state) {
    const auto m = biolek_linear();
    const auto w = Waveform::rectangular(PulseTrain{});
    SimConfig cfg;
    cfg.x0 = 0.1;
    cfg.periods = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tr = integrate(m, w, cfg);
        benchmark::DoNotOptimize(tr.states.back());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntegratePeriods)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_IntegrateSinusoid(benchmark::State& state) {
    const auto m = biolek_linear();
    const auto w = Waveform::sinusoid(0.05, 1.0);
    SimConfig cfg;
    cfg.x0 = 0.1;
    cfg.periods = 64;
    cfg.dt = 1.0 / 256;
    for (auto _ : state) {
        auto tr = integrate(m, w, cfg);
        benchmark::DoNotOptimize(tr.states.back());
    }
}
BENCHMARK(BM_IntegrateSinusoid);

static void BM_AveragedRhsQuadrature(benchmark::State& state) {
    const auto m = biolek_linear();
    const auto w = Waveform::sinusoid(0.05, 1.0);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(averaged_rhs(m, w, x));
        x = x < 0.7 ? x + 1e-6 : 0.3;
    }
}
BENCHMARK(BM_AveragedRhsQuadrature);

static void BM_FindFixedPointRect(benchmark::State& state) {
    const auto m = biolek_linear();
    const auto w = Waveform::rectangular(PulseTrain{});
    for (auto _ : state) {
        auto report = find_fixed_point(m, w);
        benchmark::DoNotOptimize(report.x_a);
    }
}
BENCHMARK(BM_FindFixedPointRect);

static void BM_BalanceRoot(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(biolek_fixed_point_general(p, {9.0, -1.0}));
}
BENCHMARK(BM_BalanceRoot)->Arg(1)->Arg(5)->Arg(10);

static void BM_SweepSection(benchmark::State& state) {
    for (auto _ : state) {
        auto line = sweep_section(5, 100);
        benchmark::DoNotOptimize(line.back().x_a);
    }
}
BENCHMARK(BM_SweepSection);

BENCHMARK_MAIN();
