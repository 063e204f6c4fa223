#include <benchmark/benchmark.h>

#include "pcg/cograph.hpp"
#include "pcg/criteria.hpp"
#include "pcg/group_spec.hpp"
#include "pcg/power_graph.hpp"

using namespace pcg;

namespace {

const char* const kSpecs[] = {"sym:5", "psl2:16", "m11", "psl3:4"};

void BM_Enumerate(benchmark::State& state) {
  const auto spec = groups::parse_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(groups::build_group(spec).order());
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PowerGraph(benchmark::State& state) {
  const auto g = groups::build_group(groups::parse_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(powergraph::power_graph(g).edge_count());
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_PowerGraph)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Brute(benchmark::State& state) {
  const auto g = groups::build_group(groups::parse_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(criteria::pcg_bruteforce(g).tag);
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Brute)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PairSearch(benchmark::State& state) {
  const auto g = groups::build_group(groups::parse_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(criteria::minimal_pair_search(g));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_PairSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyNice(benchmark::State& state) {
  numtheory::Nat n = numtheory::pow2(static_cast<unsigned>(state.range(0))) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(numtheory::classify_nice(n).tag);
}
BENCHMARK(BM_ClassifyNice)->Arg(64)->Arg(128)->Arg(199)->Unit(benchmark::kMicrosecond);

void BM_FamilySweep(benchmark::State& state) {
  const char* family = state.range(0) == 0 ? "psl2-char2" : "suzuki";
  const std::uint64_t last = state.range(0) == 0 ? 200 : 100;
  for (auto _ : state) benchmark::DoNotOptimize(criteria::family_sweep(family, 1, last).size());
  state.SetLabel(family);
}
BENCHMARK(BM_FamilySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Decompose(benchmark::State& state) {
  const auto g = groups::build_group(groups::parse_spec("psl2:16"));
  const auto pg = powergraph::power_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(cograph::is_cograph(pg));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
