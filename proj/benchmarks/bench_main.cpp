#include <benchmark/benchmark.h>

#include "pellcount/oracle.hpp"
#include "pellcount/pell.hpp"
#include "pellcount/quartic.hpp"
#include "pellcount/reduction.hpp"

namespace {

using namespace pellcount;

void BM_FundamentalUnit(benchmark::State& state) {
  const Nat D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_norm1(D));
}
BENCHMARK(BM_FundamentalUnit)->Arg(61)->Arg(1000099)->Arg(1999993);

void BM_QuarticX2DY4(benchmark::State& state) {
  const Nat D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_x2_Dy4_1(D));
}
BENCHMARK(BM_QuarticX2DY4)->Arg(1785)->Arg(2 * 97 * 97 * 99)->Arg(4 * 51 * 97 * 97);

void BM_QuarticAX2BY4Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_ax2_by4_1(97, 2 * 99));
}
BENCHMARK(BM_QuarticAX2BY4Sieve);

void BM_SolveAll(benchmark::State& state) {
  const Instance inst{Nat(state.range(0)), Nat(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(inst, {}, SolveMode::Fast));
}
BENCHMARK(BM_SolveAll)->Args({3, 73})->Args({97, 99})->Args({89, 98})->Args({2, 32 * 1785});

void BM_BruteEqM(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_eqM(97, 99, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BruteEqM)->Arg(100'000);

}  // namespace
BENCHMARK_MAIN();
