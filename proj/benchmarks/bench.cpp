// Microbenchmarks for the hot paths: exact scalar arithmetic, series
// expansion, and the delta-decomposition pipeline behind the quadratic
// relations.

#include <benchmark/benchmark.h>

#include "wqt/currents.hpp"
#include "wqt/factored.hpp"
#include "wqt/product.hpp"
#include "wqt/structure.hpp"
#include "wqt/verify.hpp"

using namespace wqt;

static void BM_ScalarQintProduct(benchmark::State& state) {
    Scalar a = Scalar::qint(ExponentFn::r());
    Scalar b = Scalar::qint(ExponentFn::r() - ExponentFn(1));
    for (auto _ : state) {
        Scalar c = a * b / (a + b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ScalarQintProduct);

static void BM_FSeries(benchmark::State& state) {
    CaseParams P(CaseId::C2);
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        LaurentSeries s = f_series(P, 1, 1, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_FSeries)->Arg(8)->Arg(16);

static void BM_SeriesExpLog(benchmark::State& state) {
    LaurentSeries s(static_cast<int>(state.range(0)));
    for (int m = 1; m <= s.order(); m += 2) s.set_coeff(m, Scalar::qint(m));
    for (auto _ : state) {
        LaurentSeries t = s.exp().log();
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SeriesExpLog)->Arg(8)->Arg(16);

static void BM_BuildTower(benchmark::State& state) {
    CaseParams P(CaseId::C2);
    int i = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Current t = build_T(P, i);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_BuildTower)->Arg(2)->Arg(4);

static void BM_QuadraticRelation(benchmark::State& state) {
    CaseParams P(CaseId::C2);
    for (auto _ : state) {
        Report r = verify_quadratic(P, 1, 1);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_QuadraticRelation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
