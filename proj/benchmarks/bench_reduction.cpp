#include <benchmark/benchmark.h>

#include <vector>

#include "lrbt/adi.hpp"
#include "lrbt/balancing.hpp"
#include "lrbt/lyapunov.hpp"
#include "lrbt/pipeline.hpp"
#include "lrbt/sampling.hpp"

namespace {

using lrbt::Complex;
using lrbt::Index;

std::vector<Complex> spread_shifts(Index count, double lo, double hi) {
  std::vector<Complex> out;
  for (Index i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.emplace_back(-(lo * std::pow(hi / lo, t)), 0.0);
  }
  return out;
}

void BM_SolveLyapunov(benchmark::State& state) {
  const auto sys = lrbt::random_stable_system(state.range(0), 2, 2, 11);
  for (auto _ : state) {
    auto g = lrbt::solve_lyapunov(sys, lrbt::GramianSide::Controllability);
    benchmark::DoNotOptimize(g.matrix.data());
  }
}
BENCHMARK(BM_SolveLyapunov)->RangeMultiplier(2)->Range(8, 64);

void BM_IntrusiveBalancedTruncation(benchmark::State& state) {
  const auto sys = lrbt::random_stable_system(state.range(0), 2, 2, 12);
  for (auto _ : state) {
    auto bt = lrbt::intrusive_balanced_truncation(sys, lrbt::OrderSelection::fixed(4));
    benchmark::DoNotOptimize(bt.hsv.data());
  }
}
BENCHMARK(BM_IntrusiveBalancedTruncation)->RangeMultiplier(2)->Range(8, 64);

// Data-driven path cost depends only on the number of shifts, not on n.
void BM_DataDrivenReduction(benchmark::State& state) {
  const Index k = state.range(0);
  const auto sys = lrbt::random_stable_system(40, 2, 2, 13);
  const auto shifts = lrbt::validate_shifts(spread_shifts(k, 0.05, 3.0),
                                            spread_shifts(k, 0.07, 2.5), 2, 2);
  const auto plan = lrbt::required_samples(shifts);
  const auto ds = lrbt::sample_model(sys, plan.points, plan.derivative_points);
  for (auto _ : state) {
    auto red = lrbt::reduce_data_driven(ds, shifts, lrbt::OrderSelection::fixed(2));
    benchmark::DoNotOptimize(red.rom.A.data());
  }
}
BENCHMARK(BM_DataDrivenReduction)->DenseRange(2, 10, 4);

void BM_IntrusiveAdiReduction(benchmark::State& state) {
  const Index n = state.range(0);
  const auto sys = lrbt::random_stable_system(n, 2, 2, 14);
  const auto shifts = lrbt::validate_shifts(spread_shifts(4, 0.05, 3.0),
                                            spread_shifts(4, 0.07, 2.5), 2, 2);
  for (auto _ : state) {
    auto red = lrbt::reduce_adi_intrusive(sys, shifts, lrbt::OrderSelection::fixed(2));
    benchmark::DoNotOptimize(red.rom.A.data());
  }
}
BENCHMARK(BM_IntrusiveAdiReduction)->RangeMultiplier(2)->Range(8, 64);

void BM_GramianQuadrature(benchmark::State& state) {
  const auto sys = lrbt::random_stable_system(12, 2, 2, 15);
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = lrbt::gramian_quadrature(sys, lrbt::GramianSide::Controllability, nodes);
    benchmark::DoNotOptimize(g.matrix.data());
  }
}
BENCHMARK(BM_GramianQuadrature)->RangeMultiplier(2)->Range(50, 400);

}  // namespace

BENCHMARK_MAIN();
