// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "heptalift/census.hpp"
#include "heptalift/genfun.hpp"
#include "heptalift/lvalue.hpp"

using namespace heptalift;

static void BM_census_reference(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(census_f2_reference());
}
BENCHMARK(BM_census_reference)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_census(benchmark::State& st)
{
    Exec ex = st.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : st)
        benchmark::DoNotOptimize(census_f2(ex));
}
BENCHMARK(BM_census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_hp_verify(benchmark::State& st)
{
    Exec ex = st.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : st)
        benchmark::DoNotOptimize(hp_verify(3, 10, ex));
}
BENCHMARK(BM_hp_verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_sym2_lvalue(benchmark::State& st)
{
    static const EigenData e = eigen_delta(2000);
    LValueOptions o;
    o.digits = static_cast<int>(st.range(1));
    o.exec = st.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : st)
        benchmark::DoNotOptimize(sym2_lvalue(e, 1, o));
}
BENCHMARK(BM_sym2_lvalue)->Args({0, 30})->Args({1, 30})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
