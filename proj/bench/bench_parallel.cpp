#include <benchmark/benchmark.h>

#include "gcon/solver.hpp"
#include "gcon/verify.hpp"

namespace {

gcon::Graph wheel(int n) {
  std::vector<gcon::Edge> es;
  for (int i = 1; i < n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, i + 1 < n ? i + 1 : 1);
  }
  return gcon::Graph(n, es);
}

void BM_KappaK(benchmark::State& state) {
  const gcon::Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcon::kappa_k(g, 3));
}

void BM_KappaKSerial(benchmark::State& state) {
  const gcon::Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcon::kappa_k_serial(g, 3));
}

void BM_LambdaK(benchmark::State& state) {
  const gcon::Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcon::lambda_k(g, 3));
}

void BM_LambdaKSerial(benchmark::State& state) {
  const gcon::Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcon::lambda_k_serial(g, 3));
}

void BM_Verify(benchmark::State& state) {
  gcon::VerifyBudget b;
  b.max_n = 4;
  b.timing = false;
  b.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(gcon::verify_reduction("R3", b).instances_checked);
}

}  // namespace

BENCHMARK(BM_KappaK)->Arg(6)->Arg(8);
BENCHMARK(BM_KappaKSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_LambdaK)->Arg(6)->Arg(8);
BENCHMARK(BM_LambdaKSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
