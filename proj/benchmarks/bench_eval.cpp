// Throughput of the four evaluation schemes, the exact oracle and the sweep
// pipeline.  Values are discarded; only the cost per evaluation matters here.

#include <benchmark/benchmark.h>

#include <cheb/algorithms.hpp>
#include <cheb/oracle.hpp>
#include <cheb/rational.hpp>
#include <cheb/sweep.hpp>

#include <bit>
#include <span>
#include <vector>

namespace {

constexpr double kPoint = 0.73;

void BM_Recurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::eval_recurrence(kPoint, n));
  }
}
BENCHMARK(BM_Recurrence)->Arg(64)->Arg(256)->Arg(1024);

void BM_Doubling(benchmark::State& state) {
  const int p = std::countr_zero(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::eval_doubling(kPoint, p));
  }
}
BENCHMARK(BM_Doubling)->Arg(64)->Arg(256)->Arg(1024);

void BM_Trig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::eval_trig(kPoint, n));
  }
}
BENCHMARK(BM_Trig)->Arg(64)->Arg(256)->Arg(1024);

void BM_Horner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> coeffs =
      cheb::float_coefficients(cheb::expanded_coefficients(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cheb::eval_horner(std::span<const double>(coeffs), kPoint));
  }
}
BENCHMARK(BM_Horner)->Arg(64)->Arg(256)->Arg(1024);

void BM_CoefficientSetup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::expanded_coefficients(n));
  }
}
BENCHMARK(BM_CoefficientSetup)->Arg(64)->Arg(256)->Arg(1024)
    ->Unit(benchmark::kMicrosecond);

void BM_ExactOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = cheb::exact::rational_of_float(kPoint);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::exact::exact_t_and_u(x, n));
  }
}
BENCHMARK(BM_ExactOracle)->Arg(64)->Arg(256)->Arg(1024)
    ->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = cheb::sweep::GridSpec::with_points(-1.0, 1.0, 51);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb::sweep::run(cheb::Algorithm::recurrence, n,
                                              spec));
  }
}
BENCHMARK(BM_Sweep)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
