#include <benchmark/benchmark.h>

#include "moyaltorus/linalg.hpp"
#include "moyaltorus/nctorus.hpp"
#include "moyaltorus/schrodinger.hpp"
#include "moyaltorus/special.hpp"

using namespace moyaltorus;

static void BM_chirp_transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Vec x(n);
  for (int k = 0; k < n; ++k) x[k] = cplx(std::sin(0.3 * k), std::cos(0.11 * k));
  for (auto _ : state) benchmark::DoNotOptimize(chirp_transform(x, 0.7391, n));
}
BENCHMARK(BM_chirp_transform)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_quad_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Grid2D w{Grid1D(0.0, 6.0, n), Grid1D(0.0, 6.0, n)};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        quad_2d([](double q, double p) { return cplx(std::exp(-q * q - p * p), 0.0); }, w));
}
BENCHMARK(BM_quad_2d)->Arg(64)->Arg(256);

static void BM_quantize_symbol_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Grid1D g(0.0, 12.0, n);
  const QuantizationParams params = QuantizationParams::from_mu(2.0);
  Grid1D axis_b = canonical_b_axis(g, params, n);
  GridSymbol F = sample_symbol(
      [](double a, double b) { return cplx(std::exp(-(a * a + b * b)), 0.0); }, half_grid(g),
      axis_b);
  for (auto _ : state) benchmark::DoNotOptimize(quantize_symbol(F, g, params));
}
BENCHMARK(BM_quantize_symbol_kernel)->Arg(128)->Arg(256)->Arg(512);

static void BM_operator_norm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Grid1D g(0.0, 12.0, n);
  const QuantizationParams params = QuantizationParams::from_theta(0.5);
  TorusElement U = generator(TorusGenerator::U, 0.5);
  TorusElement V = generator(TorusGenerator::V, 0.5);
  GridOperator A = quantize_symbol(to_symbol(U + V, params), g, params);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(A.entries));
}
BENCHMARK(BM_operator_norm)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
