#include "landspec/comparative_statics.hpp"
#include "landspec/extensions.hpp"
#include "landspec/monetary.hpp"
#include "landspec/open_economy.hpp"

#include <benchmark/benchmark.h>

using namespace landspec;

namespace {

ScenarioParams open_reference(double epsilon)
{
    ScenarioParams p;
    p.theta_x = 0.6;
    p.theta = 0.5;
    p.gross_r = 1.55;
    p.eta = 0.4;
    p.alpha = 0.33;
    p.a = 15.0;
    p.delta = 0.2;
    p.epsilon = epsilon;
    return p;
}

ScenarioParams monetary_reference(double epsilon)
{
    ScenarioParams p = open_reference(epsilon);
    p.gross_r.reset();
    p.gross_mu = 1.5;
    p.theta = 0.2;
    p.delta = 0.9;
    return p;
}

void BM_OpenBgp(benchmark::State& state)
{
    const auto p = open_reference(0.05);
    for (auto _ : state) benchmark::DoNotOptimize(open::solve_bgp(p));
}
BENCHMARK(BM_OpenBgp);

void BM_MonetaryBgp(benchmark::State& state)
{
    const auto p = monetary_reference(0.05);
    for (auto _ : state) benchmark::DoNotOptimize(monetary::solve_bgp_monetary(p));
}
BENCHMARK(BM_MonetaryBgp);

void BM_EpsilonBar(benchmark::State& state)
{
    const auto p = open_reference(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(open::epsilon_bar(p));
}
BENCHMARK(BM_EpsilonBar);

void BM_SignMap(benchmark::State& state)
{
    const auto p = open_reference(0.0);
    const auto grid = statics::linear_grid(0.0, 1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(statics::sign_map(p, Economy::open, Param::theta_x, grid, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignMap)->Arg(50)->Arg(200);

void BM_CriticalEpsilon(benchmark::State& state)
{
    const auto p = monetary_reference(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(statics::critical_epsilon(p, Economy::monetary, Param::mu));
}
BENCHMARK(BM_CriticalEpsilon)->Unit(benchmark::kMillisecond);

void BM_UnbalancedPath(benchmark::State& state)
{
    const auto p = open_reference(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(ext::unbalanced_path(p, 0.02, 0.01, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UnbalancedPath)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
