#include "magic/cavity.hpp"
#include "magic/detunings.hpp"
#include "magic/optimizer.hpp"
#include "magic/polarizability.hpp"
#include "magic/wigner.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace magic;

namespace {

const AtomRecord& record(const char* species, int F) { return *find_record(builtin_registry(), species, F); }

void BM_Wigner3j(benchmark::State& state) {
    const int tj = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wigner_3j(half(tj), 1, half(tj), half(tj - 2), 1, half(-tj)));
}
BENCHMARK(BM_Wigner3j)->Arg(3)->Arg(9)->Arg(21);

void BM_Wigner6j(benchmark::State& state) {
    const int tI = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wigner_6j(half(1), half(3), 1, half(tI + 1), half(tI - 1), half(tI)));
}
BENCHMARK(BM_Wigner6j)->Arg(3)->Arg(9)->Arg(21);

void BM_SolveDetunings(benchmark::State& state) {
    const AtomRecord& cs = record("133Cs", 4);
    for (auto _ : state) benchmark::DoNotOptimize(solve_detunings(cs));
}
BENCHMARK(BM_SolveDetunings);

void BM_MagicDistance(benchmark::State& state) {
    const AtomRecord& atom = state.range(0) ? record("133Cs", 4) : record("87Rb", 1);
    for (auto _ : state) benchmark::DoNotOptimize(magic_distance(atom, std::numbers::pi / 4, 391.2));
}
BENCHMARK(BM_MagicDistance)->Arg(0)->Arg(1);

void BM_Optimize(benchmark::State& state) {
    const AtomRecord& atom = state.range(0) ? record("133Cs", 4) : record("87Rb", 1);
    for (auto _ : state) benchmark::DoNotOptimize(optimize_detuning(atom, std::numbers::pi / 4));
}
BENCHMARK(BM_Optimize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CavityCoefficients(benchmark::State& state) {
    const AtomRecord& rb = record("87Rb", 2);
    CavityConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(effective_params(rb, cfg, 391.2));
}
BENCHMARK(BM_CavityCoefficients);

}  // namespace
BENCHMARK_MAIN();
