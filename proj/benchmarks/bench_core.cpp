#include <benchmark/benchmark.h>

#include <random>

#include "clifford_lab/measure.hpp"
#include "clifford_lab/otsuki.hpp"
#include "clifford_lab/pinching.hpp"
#include "clifford_lab/spectra.hpp"

namespace {

using namespace clifford_lab;

void BM_IntegrateProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntegratorOptions opts;
  opts.step = 1.0 / static_cast<double>(state.range(1));
  const double l0 = 0.9 * clifford_lambda(n);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_profile(n, l0, opts).period());
}
BENCHMARK(BM_IntegrateProfile)->ArgsProduct({{3, 5}, {250, 1000, 4000}});

void BM_PeriodQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double l0 = 0.75 * clifford_lambda(n);
  for (auto _ : state) benchmark::DoNotOptimize(period_quadrature(n, l0));
}
BENCHMARK(BM_PeriodQuadrature)->DenseRange(3, 7, 2);

void BM_SigmaReport(benchmark::State& state) {
  const auto p = integrate_profile(4, 0.9 * clifford_lambda(4));
  for (auto _ : state) benchmark::DoNotOptimize(make_sigma_report(p, 6).keyeq_residual);
}
BENCHMARK(BM_SigmaReport);

void BM_TensorOracle(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto spec = random_traceless_spectrum(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_tensor_oracle(spec).ricci_sq);
}
BENCHMARK(BM_TensorOracle)->Arg(4)->Arg(8);

void BM_ClosedFormInvariants(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto spec = random_traceless_spectrum(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_invariants_dim4(spec).weyl_sq);
}
BENCHMARK(BM_ClosedFormInvariants);

void BM_DeltaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monotonicity_table(n, 6).entries.size());
}
BENCHMARK(BM_DeltaTable)->Arg(3)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
