#include <benchmark/benchmark.h>

#include "su2para/clebsch.hpp"
#include "su2para/irreps.hpp"
#include "su2para/operators.hpp"
#include "su2para/paradiff.hpp"
#include "su2para/random.hpp"
#include "su2para/spectral.hpp"

using namespace su2para;

static void BM_ForwardTransform(benchmark::State& state) {
  const int band = int(state.range(0));
  Rng rng(1);
  SpectralFunction f = random_band_function(rng, band);
  auto grid = haar_grid(band);
  GridFunction vals = inverse_transform(f, grid);
  for (auto _ : state)
    benchmark::DoNotOptimize(forward_transform(vals, band));
  state.SetComplexityN(band);
}
BENCHMARK(BM_ForwardTransform)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

static void BM_InverseTransform(benchmark::State& state) {
  const int band = int(state.range(0));
  Rng rng(1);
  SpectralFunction f = random_band_function(rng, band);
  auto grid = haar_grid(band);
  for (auto _ : state)
    benchmark::DoNotOptimize(inverse_transform(f, grid));
}
BENCHMARK(BM_InverseTransform)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

static void BM_WignerBlock(benchmark::State& state) {
  const int two_j = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(wigner_d(two_j, 0.7));
}
BENCHMARK(BM_WignerBlock)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_QuantizedApply(benchmark::State& state) {
  const int band = int(state.range(0));
  Rng rng(2);
  SpectralFunction c = random_zygmund_witness(rng, 8, 1.0);
  Symbol a = coefficient_symbol(c, band);
  OpPtr op = quantized_operator(a, band, band);
  SpectralFunction u = random_band_function(rng, band);
  for (auto _ : state) benchmark::DoNotOptimize(op->apply(u));
}
BENCHMARK(BM_QuantizedApply)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

static void BM_ParaApply(benchmark::State& state) {
  const int band = int(state.range(0));
  Rng rng(2);
  SpectralFunction c = random_zygmund_witness(rng, 8, 1.0);
  OpPtr op = para_operator(c, 8.0, band, band);
  SpectralFunction u = random_band_function(rng, band);
  for (auto _ : state) benchmark::DoNotOptimize(op->apply(u));
}
BENCHMARK(BM_ParaApply)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

BENCHMARK_MAIN();
