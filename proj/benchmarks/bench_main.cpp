#include <benchmark/benchmark.h>

#include "gentaut/chern.hpp"
#include "gentaut/ext.hpp"
#include "gentaut/symrep.hpp"

using namespace gentaut;

static void BM_CharacterTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(murnaghan_nakayama_table(m));
}
BENCHMARK(BM_CharacterTable)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_BruteForceTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_character_table(m));
}
BENCHMARK(BM_BruteForceTable)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_ChernN10(benchmark::State& state) {
  const BundleSpec spec({Block{4, 2, DivisorClass::symbol("e1"), YoungDiagram({2, 1, 1})},
                         Block{3, 3, DivisorClass::symbol("e2"), YoungDiagram({2, 1})},
                         Block{2, 1, DivisorClass{}, YoungDiagram({1, 1})},
                         Block{1, 2, DivisorClass::symbol("e3"), YoungDiagram({1})}});
  for (auto _ : state) benchmark::DoNotOptimize(c1(spec));
}
BENCHMARK(BM_ChernN10)->Unit(benchmark::kMicrosecond);

static void BM_TraceOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BundleSpec spec({Block{n / 2, 2, DivisorClass::symbol("a"), YoungDiagram::trivial(n / 2)},
                         Block{n - n / 2, 3, DivisorClass::symbol("b"), YoungDiagram::sign(n - n / 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_restriction_rank(spec));
}
BENCHMARK(BM_TraceOracle)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

static void BM_CosetEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LabeledComposition lambda({n / 3, n / 3, n - 2 * (n / 3)});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cosets(lambda));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(index_p(lambda)));
}
BENCHMARK(BM_CosetEnumeration)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_GeneratingPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<GeneratingInput> inputs{{1, DivisorClass::symbol("e1")},
                                            {2, DivisorClass::symbol("e2")},
                                            {3, DivisorClass::symbol("e3")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(generating_polynomial(n, inputs, GeneratingVariant::Sign));
  }
}
BENCHMARK(BM_GeneratingPolynomial)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
