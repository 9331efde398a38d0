#include <benchmark/benchmark.h>

#include "wq/algebras.hpp"
#include "wq/field_matrix.hpp"
#include "wq/poisson.hpp"
#include "wq/tseries.hpp"

using namespace wq;

static void BM_SymbolE6AllPairs(benchmark::State& state) {
  const auto p = build_preset(AlgebraKind::E6);
  const SymbolEngine engine(p);
  for (auto _ : state)
    for (const auto& a : p.lambdas)
      for (const auto& b : p.lambdas) benchmark::DoNotOptimize(engine.symbol(a, b));
}
BENCHMARK(BM_SymbolE6AllPairs)->Unit(benchmark::kMillisecond);

static void BM_ClosureE6(benchmark::State& state) {
  const auto p = build_preset(AlgebraKind::E6);
  for (auto _ : state) benchmark::DoNotOptimize(verify_closure(p));
}
BENCHMARK(BM_ClosureE6)->Unit(benchmark::kMillisecond);

static void BM_InverseDn(benchmark::State& state) {
  const auto p = build_preset(AlgebraKind::Dn, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(p.m));
}
BENCHMARK(BM_InverseDn)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

static void BM_PolyGcd(benchmark::State& state) {
  const LaurentPoly a = sym_minus(12) * sym_plus(5) * sym_minus(7);
  const LaurentPoly b = sym_plus(6) * sym_minus(5) * sym_plus(3);
  for (auto _ : state) benchmark::DoNotOptimize(RationalFunction(a, b));
}
BENCHMARK(BM_PolyGcd);
BENCHMARK_MAIN();
