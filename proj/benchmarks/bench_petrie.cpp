#include <benchmark/benchmark.h>

#include "petrie/oracle.hpp"
#include "petrie/petrie_numbers.hpp"

using namespace petrie;

namespace {

const Partition kTall{3, 3, 3, 2, 2, 2, 1, 1};

void BM_PetrieMethod(benchmark::State& state) {
    const auto method = static_cast<Method>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(petrie_number(method, 4, kTall));
    state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_PetrieMethod)->DenseRange(0, 2);

void BM_PieriExpand(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pieri_expand(4, m, {2, 1}));
}
BENCHMARK(BM_PieriExpand)->DenseRange(2, 8, 2);

void BM_PlethysticExpand(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(plethystic_mn_expand(3, n, {1}));
}
BENCHMARK(BM_PlethysticExpand)->DenseRange(1, 3);

void BM_JacobiTrudi(benchmark::State& state) {
    const int nvars = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::jacobi_trudi_polynomial(SkewShape({3, 2, 1}), nvars));
}
BENCHMARK(BM_JacobiTrudi)->DenseRange(3, 7, 2);

}  // namespace

BENCHMARK_MAIN();
