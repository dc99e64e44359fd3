#include "subaction/subaction.hpp"

#include <benchmark/benchmark.h>

using namespace subaction;

static void BM_G(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto map = CircleMap::minus_doubling();
    const auto a = PotentialSpec::quadratic().sample(n);
    auto f = GridFunction::constant(n, 0.0);
    for (auto _ : state) {
        f = G_op(map, a, f);
        benchmark::DoNotOptimize(f);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_G)->RangeMultiplier(4)->Range(360, 23040);

static void BM_Solve(benchmark::State& state) {
    SolveConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(PotentialSpec::quadratic(), CircleMap::minus_doubling(), cfg));
}
BENCHMARK(BM_Solve)->Arg(1440)->Arg(5760)->Unit(benchmark::kMillisecond);

static void BM_PeriodicOracle(benchmark::State& state) {
    const auto pmax = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(periodic_mA(PotentialSpec::sinsq(), CircleMap::doubling(), pmax));
}
BENCHMARK(BM_PeriodicOracle)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
