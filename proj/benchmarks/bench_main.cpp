#include <benchmark/benchmark.h>

#include "hypersub/cospectral.hpp"
#include "hypersub/families.hpp"
#include "hypersub/predictors.hpp"
#include "hypersub/spectra.hpp"
#include "hypersub/subdivision.hpp"

namespace {

using namespace hypersub;

void BM_SubdivideHyperflower(benchmark::State& state) {
  const auto f = hyperflower(static_cast<std::size_t>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(subdivide(f).hypergraph.edge_count());
}
BENCHMARK(BM_SubdivideHyperflower)->Arg(4)->Arg(16)->Arg(64);

void BM_SubdividedSpectrum(benchmark::State& state) {
  const auto s = subdivide(hyperflower(static_cast<std::size_t>(state.range(0)), 2, 3));
  const auto a = adjacency_matrix(s.hypergraph);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a).size());
}
BENCHMARK(BM_SubdividedSpectrum)->Arg(4)->Arg(16)->Arg(64);

void BM_PredictPetalOverlapped(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(predict_t5(l, 2, 3).value_count());
}
BENCHMARK(BM_PredictPetalOverlapped)->Arg(4)->Arg(8)->Arg(16);

void BM_AuditSquidLike(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(audit_t6(k).pass);
}
BENCHMARK(BM_AuditSquidLike)->Arg(3)->Arg(5);

void BM_IsomorphismRefutation(benchmark::State& state) {
  const auto a = shrikhande_graph();
  const auto b = rook_graph_4x4();
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b).verdict);
}
BENCHMARK(BM_IsomorphismRefutation);

}  // namespace

BENCHMARK_MAIN();
