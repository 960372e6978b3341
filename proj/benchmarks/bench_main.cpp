#include <benchmark/benchmark.h>

#include <vector>

#include "lodesq/lodesq.hpp"

namespace {

lodesq::PointSet halton_set(std::size_t n) {
  const std::vector<std::uint32_t> bases{2, 3};
  return lodesq::halton(n, bases, 1);
}

void BM_Energy(benchmark::State& state) {
  const auto p = halton_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lodesq::energy(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Energy)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_EnergyAndGradient(benchmark::State& state) {
  const auto p = halton_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lodesq::energy_and_gradient(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnergyAndGradient)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_GradientStep(benchmark::State& state) {
  auto p = halton_set(128);
  for (auto _ : state) {
    p = lodesq::gradient_step(p, 1e-5);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GradientStep);

void BM_StarDiscrepancy(benchmark::State& state) {
  const auto p = halton_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lodesq::star_discrepancy(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StarDiscrepancy)->RangeMultiplier(2)->Range(32, 512);

void BM_StarDiscrepancy3d(benchmark::State& state) {
  const auto p = lodesq::sobol(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(lodesq::star_discrepancy(p));
}
BENCHMARK(BM_StarDiscrepancy3d)->Arg(64)->Arg(128);

void BM_L2Discrepancy(benchmark::State& state) {
  const auto p = halton_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lodesq::l2_discrepancy(p));
}
BENCHMARK(BM_L2Discrepancy)->Arg(128)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
