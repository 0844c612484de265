#include <benchmark/benchmark.h>

#include "superchar/character_table.hpp"
#include "superchar/supertheory.hpp"
#include "superchar/vanishing.hpp"
#include "superchar/verifier.hpp"

using namespace superchar;

namespace {

const char* const kGroups[] = {"S3", "D4", "Q8", "A4", "D6", "S4", "Q16"};

void BM_Dixon(benchmark::State& state) {
  auto g = catalog_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(dixon_character_table(g));
  state.SetLabel(g->label());
}
BENCHMARK(BM_Dixon)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  auto t = dixon_character_table(catalog_group(kGroups[state.range(0)]));
  EnumerateOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(1));
  std::size_t n = 0;
  for (auto _ : state) {
    auto all = enumerate_scts(t, opts);
    n = all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["theories"] = static_cast<double>(n);
  state.SetLabel(t->group().label());
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Analysis(benchmark::State& state) {
  auto s = finest(dixon_character_table(catalog_group(kGroups[state.range(0)])));
  for (auto _ : state) {
    Analysis a(s);
    benchmark::DoNotOptimize(a.v_series());
    benchmark::DoNotOptimize(a.u_theory());
  }
  state.SetLabel(s.group().label());
}
BENCHMARK(BM_Analysis)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

// Whole theorem suite on the finest and coarsest theories.
void BM_RunSuite(benchmark::State& state) {
  auto t = dixon_character_table(catalog_group(kGroups[state.range(0)]));
  auto s = state.range(1) ? coarsest(t) : finest(t);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(s));
  state.SetLabel(t->group().label());
}
BENCHMARK(BM_RunSuite)->ArgsProduct({{0, 1, 2, 3, 4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
