#include <benchmark/benchmark.h>

#include "qpsurf/corpus.hpp"
#include "qpsurf/jacobian.hpp"
#include "qpsurf/potential_builder.hpp"
#include "qpsurf/qp.hpp"
#include "qpsurf/verify.hpp"

using namespace qpsurf;

static void BM_TorusQP(benchmark::State& state) {
  const Triangulation t = corpus_triangulation("torus");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qp_of_triangulation(t, order));
}
BENCHMARK(BM_TorusQP)->Arg(6)->Arg(14);

static void BM_TorusMutate(benchmark::State& state) {
  const QP q = qp_of_triangulation(corpus_triangulation("torus"), static_cast<int>(state.range(0)));
  const std::string k = q.quiver().vertices().front();
  for (auto _ : state) benchmark::DoNotOptimize(mutate_qp(q, k));
}
BENCHMARK(BM_TorusMutate)->Arg(6)->Arg(14);

static void BM_SplitSquare(benchmark::State& state) {
  const UnreducedQP u = build_unreduced_qp(corpus_triangulation("once-punctured-square"), 14);
  for (auto _ : state) benchmark::DoNotOptimize(split_qp(u.qp));
}
BENCHMARK(BM_SplitSquare);

static void BM_HexagonDim(benchmark::State& state) {
  const QP q = qp_of_triangulation(corpus_triangulation("hexagon"), 10);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_quotient_dim(q, order));
}
BENCHMARK(BM_HexagonDim)->Arg(4)->Arg(8);

static void BM_TorusRigidity(benchmark::State& state) {
  const QP q = qp_of_triangulation(corpus_triangulation("torus"), 6);
  for (auto _ : state) benchmark::DoNotOptimize(is_rigid_up_to(q, 6));
}
BENCHMARK(BM_TorusRigidity);

static void BM_FlipCompat(benchmark::State& state) {
  const Triangulation t = corpus_triangulation("once-punctured-square-star");
  for (auto _ : state) benchmark::DoNotOptimize(check_flip_compatibility(t, "e1", 4));
}
BENCHMARK(BM_FlipCompat);

static void BM_CanonicalKey(benchmark::State& state) {
  const IntegerMatrix b = signed_adjacency(corpus_triangulation("hexagon-fan"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_matrix_key(b));
}
BENCHMARK(BM_CanonicalKey);
BENCHMARK_MAIN();
