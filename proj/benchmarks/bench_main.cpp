#include <benchmark/benchmark.h>

#include "redforge/embed.hpp"
#include "redforge/families.hpp"
#include "redforge/geom.hpp"
#include "redforge/search.hpp"

using namespace redforge;

static void BM_BuildTreeOrderO(benchmark::State& state) {
  const auto g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(g, order_O_strategy()).size());
}
BENCHMARK(BM_BuildTreeOrderO)->DenseRange(3, 5);

static void BM_ReducedForm(benchmark::State& state) {
  const auto t = build_tree(complete_graph(static_cast<int>(state.range(0))), order_O_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(reduced_form(t));
}
BENCHMARK(BM_ReducedForm)->DenseRange(3, 5);

static void BM_HPoly(benchmark::State& state) {
  const auto t = build_tree(complete_graph(static_cast<int>(state.range(0))), order_O_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(h_poly_unchecked(t, 0, HMode::Refined));
}
BENCHMARK(BM_HPoly)->DenseRange(3, 5);

static void BM_Embeddability(benchmark::State& state) {
  const auto t = build_tree(complete_graph(static_cast<int>(state.range(0))), order_O_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(check_embeddability(t).level);
}
BENCHMARK(BM_Embeddability)->DenseRange(3, 4);

static void BM_Triangulation(benchmark::State& state) {
  const auto t = build_tree(complete_graph(4), order_O_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(verify_triangulation(t).holds);
}
BENCHMARK(BM_Triangulation)->Unit(benchmark::kMillisecond);

static void BM_Shelling(benchmark::State& state) {
  const auto t = build_tree(complete_graph(4), order_O_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(verify_shelling(t).holds);
}
BENCHMARK(BM_Shelling);

static void BM_SearchK4(benchmark::State& state) {
  SearchConfig cfg;
  cfg.root = complete_graph(4);
  cfg.use_cache = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_c7(cfg).outcome);
}
BENCHMARK(BM_SearchK4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_AchievableK4(benchmark::State& state) {
  const auto g = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(achievable_q(g).size());
}
BENCHMARK(BM_AchievableK4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
