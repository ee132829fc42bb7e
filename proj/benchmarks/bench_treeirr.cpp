#include <benchmark/benchmark.h>

#include <vector>

#include "treeirr/enumeration.hpp"
#include "treeirr/extremal.hpp"
#include "treeirr/indices.hpp"

using namespace treeirr;

namespace {

void BM_EnumerateK3(benchmark::State& state) {
  InternalDegreeSequence seq = InternalDegreeSequence::of({4, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_realizations(seq));
}
BENCHMARK(BM_EnumerateK3);

void BM_EnumerateK4(benchmark::State& state) {
  InternalDegreeSequence seq = InternalDegreeSequence::of({8, 5, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_realizations(seq));
}
BENCHMARK(BM_EnumerateK4);

void BM_EnumerateWide(benchmark::State& state) {
  // k = 7 already walks 7^5 labeled skeletons before dedup
  InternalDegreeSequence seq = InternalDegreeSequence::of({4, 4, 3, 3, 3, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(count_realizations(seq));
}
BENCHMARK(BM_EnumerateWide);

void BM_CanonicalCodeCaterpillar(benchmark::State& state) {
  std::vector<int> order(static_cast<std::size_t>(state.range(0)), 3);
  Tree tree = build_caterpillar(order);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CanonicalCodeCaterpillar)->Range(8, 512)->Complexity();

void BM_IndexReport(benchmark::State& state) {
  std::vector<int> order(static_cast<std::size_t>(state.range(0)), 4);
  Tree tree = build_caterpillar(order);
  for (auto _ : state) benchmark::DoNotOptimize(index_report(tree));
}
BENCHMARK(BM_IndexReport)->Range(8, 512);

void BM_ExtremalSearch(benchmark::State& state) {
  InternalDegreeSequence seq = InternalDegreeSequence::of({8, 5, 4, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(extremal_search(seq, IndexKind::sigma));
}
BENCHMARK(BM_ExtremalSearch);

void BM_GapIdentitySweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_gap_identity(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GapIdentitySweep)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
