#include <benchmark/benchmark.h>

#include "fluxkit/annulus_flux.hpp"
#include "fluxkit/johnson.hpp"
#include "fluxkit/sh1.hpp"
#include "generators.hpp"

using namespace fluxkit;

static void BM_WordMatrix(benchmark::State& state) {
  testgen::Rng rng(7);
  const Genus g(static_cast<int>(state.range(0)));
  const auto w = testgen::random_twist_word(rng, g, 32);
  for (auto _ : state) benchmark::DoNotOptimize(word_matrix(w, g));
}
BENCHMARK(BM_WordMatrix)->Arg(2)->Arg(4)->Arg(8);

static void BM_TheoremA(benchmark::State& state) {
  testgen::Rng rng(8);
  const Genus g(static_cast<int>(state.range(0)));
  const auto w = testgen::random_push_word(rng, g, 8);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_a_check(w, g));
}
BENCHMARK(BM_TheoremA)->Arg(2)->Arg(4);

static void BM_Reduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<AreaRelation> rels;
  SH1Expr target;
  for (int i = 0; i < n; ++i) {
    SH1Expr e;
    e.add("s" + std::to_string(i), 2).add("s" + std::to_string((i + 1) % n), 1).add("s" + std::to_string((i + 3) % n), -1);
    rels.push_back({e, Rational(i + 1, 3)});
    target += Integer(i % 3 - 1) * e;
  }
  for (auto _ : state) benchmark::DoNotOptimize(reduce(target, rels));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(16)->Arg(32);

static void BM_FlsecPushNumeric(benchmark::State& state) {
  const FlatAnnulus ann(0.1, 1.0);
  const auto arc = TransverseArc::straight_segment(0.0, 0.2, 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(flsec_push_numeric(3, ann, arc));
}
BENCHMARK(BM_FlsecPushNumeric)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
