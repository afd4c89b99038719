#include <benchmark/benchmark.h>

#include "bicoeff/power_series.hpp"
#include "bicoeff/rng.hpp"

namespace {

bicoeff::PowerSeries random_normalized(int order, uint64_t seed) {
  bicoeff::Rng rng(seed);
  std::vector<bicoeff::Complex> tail(static_cast<size_t>(order) - 1);
  for (auto& c : tail) c = 0.8 * rng.uniform() * rng.unit_circle();
  return bicoeff::PowerSeries::normalized(tail, order);
}

void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = random_normalized(order, 1);
  const auto b = random_normalized(order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::mul(a, b));
  }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesCompose(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto outer = random_normalized(order, 3);
  const auto inner = random_normalized(order, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::compose(outer, inner));
  }
}
BENCHMARK(BM_SeriesCompose)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesRevert(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = random_normalized(order, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::revert(f));
  }
}
BENCHMARK(BM_SeriesRevert)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
