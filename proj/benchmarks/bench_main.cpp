#include <benchmark/benchmark.h>

#include "latin/catalog.hpp"
#include "latin/critical.hpp"

using namespace latin;

static void BM_BuildBoard(benchmark::State& st) {
  const char* refs[] = {"monthai_base?n=8", "hexagon_base?n=3", "cube_base?m=4"};
  const char* ref = refs[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(build_board(ref));
  st.SetLabel(ref);
}
BENCHMARK(BM_BuildBoard)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_FirstWarp(benchmark::State& st) {
  const char* refs[] = {"monthai_base?n=6", "hexagon_base?n=3", "tetrahedron_base?m=4", "cube_base?m=4"};
  BoardPtr b = build_board(refs[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(find_warp_classes(*b, 1, 1));
  st.SetLabel(refs[st.range(0)]);
}
BENCHMARK(BM_FirstWarp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_WarpEngines(benchmark::State& st) {
  BoardPtr b = build_board("latin_square_base?n=5");
  WarpOptions o;
  o.engine = st.range(0) == 0 ? Engine::dlx : Engine::backtrack;
  for (auto _ : st) {
    std::size_t n = for_each_warp_class(*b, o, [](const WarpClass&) { return true; });
    benchmark::DoNotOptimize(n);
  }
  st.SetLabel(st.range(0) == 0 ? "dlx" : "backtrack");
}
BENCHMARK(BM_WarpEngines)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PruneBySymmetry(benchmark::State& st) {
  BoardPtr b = build_board("latin_square_base?n=5");
  for (auto _ : st) benchmark::DoNotOptimize(find_warp_classes(*b, 1, SIZE_MAX, st.range(0) != 0));
}
BENCHMARK(BM_PruneBySymmetry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& st) {
  BoardPtr b = build_board(st.range(0) == 0 ? "b1" : "latin_square_base?n=5");
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_group(b->design).order());
}
BENCHMARK(BM_Automorphisms)->Arg(0)->Arg(1);

static void BM_Classify(benchmark::State& st) {
  BoardPtr b = build_board("sudoku_base");
  for (auto _ : st) benchmark::DoNotOptimize(classify_board(*b));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_CriticalSet(benchmark::State& st) {
  BoardPtr b = build_board("monthai_base?n=6");
  LatinBoard l = label(WovenBoard{b, find_warp_classes(*b, 1, 1).at(0)}, parse_symbols("1..12"));
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(find_critical_set(l, ++seed));
}
BENCHMARK(BM_CriticalSet)->Unit(benchmark::kMillisecond);

static void BM_CountCompletions(benchmark::State& st) {
  BoardPtr b = build_board("sudoku_base");
  // empty grid: completions found per second
  PartialBoard p{b, 1, parse_symbols("1..9"), std::vector<int>(81, -1)};
  for (auto _ : st) benchmark::DoNotOptimize(count_completions(p, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_CountCompletions)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
