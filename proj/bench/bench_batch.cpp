#include <benchmark/benchmark.h>

#include <cmath>

#include "envsolve/batch.hpp"

using namespace envsolve;

namespace {

std::vector<EquationParams> sweep_params(int count) {
  std::vector<EquationParams> params;
  for (int n = 2; n <= 7; ++n) {
    const auto grid = batch::param_grid(n, -5, 5, count);
    params.insert(params.end(), grid.begin(), grid.end());
  }
  return params;
}

void BM_Classify(benchmark::State& state) {
  const auto params = sweep_params(101);
  for (auto _ : state) benchmark::DoNotOptimize(batch::classify_all(params));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto params = sweep_params(101);
  for (auto _ : state) benchmark::DoNotOptimize(batch::classify_all_serial(params));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

void BM_Solve(benchmark::State& state) {
  const auto params = sweep_params(41);
  for (auto _ : state) benchmark::DoNotOptimize(batch::solve_all(params));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

void BM_SolveSerial(benchmark::State& state) {
  const auto params = sweep_params(41);
  for (auto _ : state) benchmark::DoNotOptimize(batch::solve_all_serial(params));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

void BM_BruteForce(benchmark::State& state) {
  const auto params = sweep_params(11);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batch::brute_force_count_all(params, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

void BM_BruteForceSerial(benchmark::State& state) {
  const auto params = sweep_params(11);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batch::brute_force_count_all_serial(params, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(params.size()));
}

SampledFunction cosh_samples(std::size_t count) {
  return SampledFunction::from_function([](double x) { return std::cosh(x); }, -2, 2, count);
}

void BM_ConjugateHull(benchmark::State& state) {
  const auto f = cosh_samples(static_cast<std::size_t>(state.range(0)));
  const auto slopes = uniform_slopes(secant_slope_domain(f), f.size());
  for (auto _ : state) benchmark::DoNotOptimize(discrete_legendre(f, slopes));
}

void BM_ConjugateExhaustive(benchmark::State& state) {
  const auto f = cosh_samples(static_cast<std::size_t>(state.range(0)));
  const auto slopes = uniform_slopes(secant_slope_domain(f), f.size());
  for (auto _ : state) benchmark::DoNotOptimize(batch::conjugate_exhaustive(f, slopes));
}

void BM_ConjugateNaive(benchmark::State& state) {
  const auto f = cosh_samples(static_cast<std::size_t>(state.range(0)));
  const auto slopes = uniform_slopes(secant_slope_domain(f), f.size());
  for (auto _ : state) benchmark::DoNotOptimize(discrete_legendre_naive(f, slopes));
}

}  // namespace

BENCHMARK(BM_Classify);
BENCHMARK(BM_ClassifySerial);
BENCHMARK(BM_Solve);
BENCHMARK(BM_SolveSerial);
BENCHMARK(BM_BruteForce)->Arg(2000)->Arg(20000);
BENCHMARK(BM_BruteForceSerial)->Arg(2000)->Arg(20000);
BENCHMARK(BM_ConjugateHull)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ConjugateExhaustive)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ConjugateNaive)->Arg(1000)->Arg(4000);

BENCHMARK_MAIN();
