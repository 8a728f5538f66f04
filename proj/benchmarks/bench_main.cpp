#include <benchmark/benchmark.h>

#include "mpbt/irrep.hpp"
#include "mpbt/operators.hpp"
#include "mpbt/protocol.hpp"
#include "mpbt/verify.hpp"

namespace {

void BM_partitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::partitions_of(n));
    }
}
BENCHMARK(BM_partitions)->Arg(8)->Arg(12)->Arg(16);

void BM_standard_tableaux(benchmark::State& state) {
    const mpbt::YoungDiagram shape({4, 3, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::standard_tableaux(shape));
    }
}
BENCHMARK(BM_standard_tableaux);

void BM_irrep_matrix(benchmark::State& state) {
    const mpbt::YoungOrthogonalRep rep(mpbt::YoungDiagram({5, 3}));
    const mpbt::Permutation p({7, 2, 5, 0, 4, 6, 1, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(rep.matrix(p));
    }
}
BENCHMARK(BM_irrep_matrix);

void BM_fidelity(benchmark::State& state) {
    const mpbt::ProtocolParams params(static_cast<int>(state.range(0)), 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::entanglement_fidelity(params));
    }
}
BENCHMARK(BM_fidelity)->Arg(6)->Arg(8);

void BM_spectrum(benchmark::State& state) {
    const mpbt::ProtocolParams params(8, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::mpbt_spectrum(params));
    }
}
BENCHMARK(BM_spectrum);

void BM_teleportation_operator(benchmark::State& state) {
    const mpbt::ProtocolParams params(static_cast<int>(state.range(0)), 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::mpbt_operator_from_signals(params));
    }
}
BENCHMARK(BM_teleportation_operator)->Arg(4)->Arg(6);

void BM_e_operator(benchmark::State& state) {
    const mpbt::YoungDiagram mu({3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::e_operator(mu, 0, 0, 5, 2));
    }
}
BENCHMARK(BM_e_operator);

void BM_srm_fidelity(benchmark::State& state) {
    const mpbt::ProtocolParams params(4, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpbt::srm_fidelity(params));
    }
}
BENCHMARK(BM_srm_fidelity);

}  // namespace

BENCHMARK_MAIN();
