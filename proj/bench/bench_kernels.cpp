#include "toledo/tables.hpp"

#include <benchmark/benchmark.h>

using namespace toledo;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_signature_grid(benchmark::State& st)
{
    const FrobeniusAlgebra V = build_algebra(Family::SO3, 7, 2);
    const FrobeniusAlgebra U = build_algebra(Family::SO3, 7, 3);
    int gmax = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(signature_grid(V, U, gmax, gmax, 1, exec_of(st)));
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_signature_grid)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);

void BM_level7_rows(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(level7_rows(exec_of(st)));
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_level7_rows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
