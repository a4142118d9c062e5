#include <benchmark/benchmark.h>

#include "vtypes/exact.hpp"
#include "vtypes/search.hpp"
#include "vtypes/spectrum.hpp"
#include "vtypes/vertex_types.hpp"

using namespace vtypes;

static void BM_CharPolyHalfGraph(benchmark::State& state) {
  const Graph g = half_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPolyHalfGraph)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_JacobiHalfGraph(benchmark::State& state) {
  const Graph g = half_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(g));
}
BENCHMARK(BM_JacobiHalfGraph)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_ClassifyAllThreshold(benchmark::State& state) {
  const Graph g = build(nsg({2, 4, 4, 3}, {3, 4, 4, 1}));
  for (auto _ : state) {
    const Classifier cl(g);
    benchmark::DoNotOptimize(cl.classify_all(Eigenvalue::of(AlgebraicNumber::minus_one())));
  }
}
BENCHMARK(BM_ClassifyAllThreshold)->Unit(benchmark::kMillisecond);

static void BM_ClassifyOmegaH7(benchmark::State& state) {
  const Graph g = half_graph(7);
  for (auto _ : state) {
    const Classifier cl(g);
    benchmark::DoNotOptimize(cl.classify_all(Eigenvalue::of(AlgebraicNumber::omega())));
  }
}
BENCHMARK(BM_ClassifyOmegaH7)->Unit(benchmark::kMillisecond);

static void BM_SearchChainNeutrals(benchmark::State& state) {
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_chain_neutrals(7, 1, workers));
}
BENCHMARK(BM_SearchChainNeutrals)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
