#include <benchmark/benchmark.h>

#include "abacus/beaufourier.hpp"
#include "abacus/lifting.hpp"
#include "abacus/random.hpp"

using namespace abacus;

static void BM_Wedge(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  Space a = abelian_space(g);
  Rng rng(1);
  MultiVector x = random_class(a, g, rng, 32), y = random_class(a, g, rng, 32);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(x, y));
}
BENCHMARK(BM_Wedge)->DenseRange(2, 5);

static void BM_DividedPower(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  MultiVector d = theta_class(PolarizedModel::principal(g));
  for (auto _ : state) benchmark::DoNotOptimize(divided_power(d, static_cast<unsigned>(g)));
}
BENCHMARK(BM_DividedPower)->DenseRange(2, 6);

static void BM_ComposeKuenneth(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  CorrClass p = kuenneth_projector(g, g);
  for (auto _ : state) benchmark::DoNotOptimize(compose(p, p));
}
BENCHMARK(BM_ComposeKuenneth)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ComposeDiagonal(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  CorrClass d = diagonal(g);
  for (auto _ : state) benchmark::DoNotOptimize(compose(d, d));
}
BENCHMARK(BM_ComposeDiagonal)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_SchollProjectors(benchmark::State& state) {
  PolarizedModel m = PolarizedModel::principal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scholl_projectors(m));
}
BENCHMARK(BM_SchollProjectors)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Fourier(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  PolarizedModel m = PolarizedModel::principal(g);
  Rng rng(2);
  MultiVector x = random_class(m.a(), g, rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(fourier(m, x));
}
BENCHMARK(BM_Fourier)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Correction(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  Rng rng(3);
  ProjectorSystem pi0 = random_orthogonal_system(g, rng, {3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(correct_projectors(pi0));
}
BENCHMARK(BM_Correction)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
