#include <benchmark/benchmark.h>

#include "vwstack/bi_series.hpp"
#include "vwstack/hilb_euler.hpp"
#include "vwstack/modular.hpp"
#include "vwstack/root_stack.hpp"

namespace {

using namespace vwstack;

void BM_MonopoleDirect(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(monopole_series_direct({6, state.range(0), 1, {}}));
    }
}
BENCHMARK(BM_MonopoleDirect)->Arg(8)->Arg(12)->Arg(20);

void BM_ClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form(6, state.range(0), {}));
    }
}
BENCHMARK(BM_ClosedForm)->Arg(12)->Arg(40);

void BM_BivariateDiagonal(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bi_diagonal(bivariate_rational(6, n, n)));
    }
}
BENCHMARK(BM_BivariateDiagonal)->Arg(8)->Arg(12);

void BM_Residue(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonal_via_residue(6, state.range(0)));
    }
}
BENCHMARK(BM_Residue)->Arg(12)->Arg(30);

void BM_EtaPower(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(eta_product_pow(-12, state.range(0)));
    }
}
BENCHMARK(BM_EtaPower)->Arg(50)->Arg(100);

void BM_Hurwitz(benchmark::State& state) {
    for (auto _ : state) {
        for (std::int64_t d = 1; d <= state.range(0); ++d) {
            benchmark::DoNotOptimize(hurwitz_H(d));
        }
    }
}
BENCHMARK(BM_Hurwitz)->Arg(200)->Arg(2000);

void BM_LatticeSum(benchmark::State& state) {
    const Rational emin(-state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lattice_sum_C(1, emin, LatticeExponent::kStrictPairs));
    }
}
BENCHMARK(BM_LatticeSum)->Arg(20)->Arg(80);

void BM_ThetaAn(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_An(state.range(0), 16));
    }
}
BENCHMARK(BM_ThetaAn)->DenseRange(1, 4);

} // namespace

BENCHMARK_MAIN();
