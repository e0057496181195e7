#include <benchmark/benchmark.h>

#include <random>

#include "polysieve/counting/counting.hpp"
#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/sieve/poisson.hpp"
#include "polysieve/structured/instances.hpp"

using namespace polysieve;

static void BM_FiberTable(benchmark::State& state) {
  const auto F = structured::instance_FC();
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counting::FiberTable(F, p).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p * p * p));
}
BENCHMARK(BM_FiberTable)->Arg(31)->Arg(61)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_GTable(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const counting::FiberTable fib(structured::instance_FC(), p);
  for (auto _ : state) benchmark::DoNotOptimize(expsum::g_table(fib).values.data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p * p * p));
}
BENCHMARK(BM_GTable)->Arg(31)->Arg(61)->Arg(97)->Arg(127)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const expsum::Classifier c(structured::instance_FA(), p);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(0, static_cast<long long>(p) - 1);
  for (auto _ : state) {
    const long long u[] = {d(rng), d(rng), d(rng)};
    benchmark::DoNotOptimize(c.classify(u).type);
  }
}
BENCHMARK(BM_Classify)->Arg(13)->Arg(47)->Arg(97);

static void BM_TDirect(benchmark::State& state) {
  const counting::FiberTable fp(structured::instance_FA(), 5), fq(structured::instance_FA(), 13);
  const sieve::SmoothWeightSpec w{static_cast<double>(state.range(0)), 6};
  for (auto _ : state) benchmark::DoNotOptimize(sieve::T_direct(fp, fq, w).value);
}
BENCHMARK(BM_TDirect)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_PoissonEvaluate(benchmark::State& state) {
  const auto tp = expsum::g_table(structured::instance_FA(), 5), tq = expsum::g_table(structured::instance_FA(), 13);
  const sieve::PoissonSide side(tp, tq, {10.0, 6});
  const auto T = side.choose_truncation(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(side.evaluate(T).value);
}
BENCHMARK(BM_PoissonEvaluate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
