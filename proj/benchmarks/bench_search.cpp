#include <benchmark/benchmark.h>

#include "bicoeff/caratheodory.hpp"
#include "bicoeff/coeff_system.hpp"

namespace {

void BM_MaximizeBox(benchmark::State& state) {
  const auto id = bicoeff::FunctionalId::of(bicoeff::Functional::Eq19);
  const long long budget = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::maximize_functional(
        id, 0.0, 1.5, 0.5, bicoeff::FeasibilityMode::Box, budget, 7));
  }
}
BENCHMARK(BM_MaximizeBox)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MaximizeTight(benchmark::State& state) {
  const auto id = bicoeff::FunctionalId::of(bicoeff::Functional::Te7);
  const long long budget = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::maximize_functional(
        id, 0.0, 1.5, 0.5, bicoeff::FeasibilityMode::Tight, budget, 7));
  }
}
BENCHMARK(BM_MaximizeTight)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SampleJointPair(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::sample_joint_pair(2.0, 2, seed++));
  }
}
BENCHMARK(BM_SampleJointPair);

void BM_SampleCaratheodory(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicoeff::sample_caratheodory(3, 4, seed++));
  }
}
BENCHMARK(BM_SampleCaratheodory);

}  // namespace
