#include <benchmark/benchmark.h>

#include "patmat/circuits.hpp"
#include "patmat/pattern.hpp"
#include "patmat/sampler.hpp"
#include "patmat/spectra.hpp"
#include "patmat/words.hpp"

namespace {

using namespace patmat;

void BM_BuildMatrix(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PatternMap map = PatternMap::mul();
    EntryDistribution dist = EntryDistribution::gaussian();
    for (auto _ : state) {
        MatrixRealization m = build_matrix(map, n, dist, 7);
        benchmark::DoNotOptimize(m.data.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildMatrix)->Arg(128)->Arg(512)->Arg(1024)->Complexity();

void BM_Eigenvalues(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MatrixRealization m = build_matrix(PatternMap::mul(), n,
                                       EntryDistribution::gaussian(), 7);
    for (auto _ : state) {
        std::vector<double> vals = eigenvalues(m);
        benchmark::DoNotOptimize(vals.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Eigenvalues)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_LevelSetSummary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PatternMap map = PatternMap::mul();
    for (auto _ : state) {
        LevelSetSummary s = level_set_summary(map, n);
        benchmark::DoNotOptimize(s.quadruple_count);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_LevelSetSummary)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_SolutionCountSolver(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Word w = Word::parse("1212");
    PatternMap map = PatternMap::mul();
    for (auto _ : state) {
        SolutionCount sc = solution_count(w, map, n, CountMode::solver);
        benchmark::DoNotOptimize(sc.count);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SolutionCountSolver)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_SolutionCountBrute(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Word w = Word::parse("1212");
    PatternMap map = PatternMap::mul();
    for (auto _ : state) {
        SolutionCount sc = solution_count(w, map, n, CountMode::brute_force);
        benchmark::DoNotOptimize(sc.count);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SolutionCountBrute)->Arg(8)->Arg(16)->Arg(24)->Complexity();

}  // namespace

BENCHMARK_MAIN();
