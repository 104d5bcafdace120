#include <benchmark/benchmark.h>

#include "schubfire/schubfire.hpp"

using namespace schubfire;

static void BM_LrMultiply(benchmark::State& state) {
  const Box box{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1};
  const auto parts = box_partitions(box);
  const Partition& a = parts[parts.size() / 2];
  const Partition& b = parts[parts.size() / 3];
  for (auto _ : state) benchmark::DoNotOptimize(lr_multiply(a, b, box));
}
BENCHMARK(BM_LrMultiply)->DenseRange(3, 5);

static void BM_SchubertProduct(benchmark::State& state) {
  const auto ctx = GrassCtx::get(3, 8);
  const ChowClass a = total_chern(BundleExpr::sym(2, BundleExpr::universal_dual()), GrassRing(ctx))[6];
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SchubertProduct);

// Tables are memoized, so this times the cached lookup after the first build.
static void BM_SymTableCached(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  sym_chern(d, 4, 20);
  for (auto _ : state) benchmark::DoNotOptimize(sym_chern(d, 4, 20));
}
BENCHMARK(BM_SymTableCached)->DenseRange(2, 3);

static void BM_TotalClass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(total_class(3, 8, 3));
}
BENCHMARK(BM_TotalClass)->Unit(benchmark::kMillisecond);

static void BM_SigmaDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigma_direct(3, 8, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SigmaDirect)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SigmaProjectiveBundle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigma_pb(3, 8, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SigmaProjectiveBundle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_UniversalLimitingClass(benchmark::State& state) {
  const UniversalRing ring(4, 20);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_direct_in(ring, 3, 3, 2));
}
BENCHMARK(BM_UniversalLimitingClass)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
