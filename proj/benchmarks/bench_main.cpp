#include <benchmark/benchmark.h>

#include "cdfbounds/beta_nc.hpp"
#include "cdfbounds/kummer_ratios.hpp"
#include "cdfbounds/marcum.hpp"
#include "cdfbounds/quantile.hpp"
#include "cdfbounds/specfun.hpp"

using namespace cdfbounds;

static void BM_BesselIScaledNorm(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_i_scaled_norm(2.5, t));
}
BENCHMARK(BM_BesselIScaledNorm)->Arg(1)->Arg(20)->Arg(200);

static void BM_KummerM(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kummer_m(5.0, 2.0, z));
}
BENCHMARK(BM_KummerM)->Arg(1)->Arg(20)->Arg(100);

static void BM_MarcumPQ(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(marcum_pq({2.5, x, 0.8 * x + 1.0}).p);
}
BENCHMARK(BM_MarcumPQ)->Arg(1)->Arg(20)->Arg(100);

static void BM_BetaNcCdf(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(beta_nc_cdf({2.0, 3.0, x, 0.4}).b);
}
BENCHMARK(BM_BetaNcCdf)->Arg(0)->Arg(10)->Arg(100);

static void BM_RecurrenceBounds(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(recurrence_difference_bounds({2.0, 5.0, 1.0}).p_upper.value);
}
BENCHMARK(BM_RecurrenceBounds);

static void BM_ErfBounds(benchmark::State& state) {
    const GammaParams p{2.0, 0.5, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(erf_bounds(p).l1.value);
}
BENCHMARK(BM_ErfBounds);

static void BM_KummerSandwich(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ratio_h_diag(5.0, 2.0, 10.0).g);
}
BENCHMARK(BM_KummerSandwich);

static void BM_QuantileBracket(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(beta_quantile_bracket(3.0, 5.0, 1e-6).y_l);
}
BENCHMARK(BM_QuantileBracket);

BENCHMARK_MAIN();
