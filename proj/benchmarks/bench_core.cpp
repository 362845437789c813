#include <benchmark/benchmark.h>

#include "mpx/dynamics.hpp"
#include "mpx/homology.hpp"
#include "mpx/multipath.hpp"
#include "mpx/path_poset.hpp"
#include "mpx/series.hpp"
#include "mpx/simplicial.hpp"

namespace {

void BM_EnumerateTournament(benchmark::State& state) {
    mpx::Digraph g = mpx::tournament(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mpx::count_multipaths(g));
}
BENCHMARK(BM_EnumerateTournament)->Arg(6)->Arg(7)->Arg(8);

void BM_ChiGrid(benchmark::State& state) {
    mpx::Digraph g = mpx::cartesian_product(mpx::linear_coherent(static_cast<int>(state.range(0))),
                                            mpx::linear_coherent(2));
    for (auto _ : state) benchmark::DoNotOptimize(mpx::chi_via_fvector(g));
}
BENCHMARK(BM_ChiGrid)->Arg(2)->Arg(3)->Arg(4);

void BM_HomologyTournament7(benchmark::State& state) {
    mpx::Digraph g = mpx::tournament(7);
    for (auto _ : state) {
        mpx::HomologySummary h = mpx::reduced_homology(mpx::multipath_complex(g));
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HomologyTournament7);

void BM_MatchingComplexSnf(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    mpx::SimplicialComplex m = mpx::matching_complex(n, edges);
    for (auto _ : state) {
        mpx::HomologySummary h = mpx::reduced_homology(m);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_MatchingComplexSnf)->Arg(6)->Arg(7);

void BM_DecomposeGridRow(benchmark::State& state) {
    mpx::Digraph g = mpx::cartesian_product(mpx::linear_coherent(static_cast<int>(state.range(0))),
                                            mpx::linear_coherent(1));
    for (auto _ : state) benchmark::DoNotOptimize(mpx::decompose(g));
}
BENCHMARK(BM_DecomposeGridRow)->Arg(8)->Arg(16)->Arg(32);

void BM_BipartiteSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mpx::gf_bipartite(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BipartiteSeries)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
