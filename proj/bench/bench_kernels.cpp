// Serial reference kernels vs their OpenMP counterparts.
//
//   ./build/bench/bench_kernels --benchmark_filter=MonteCarlo

#include <benchmark/benchmark.h>
#include <omp.h>

#include "chordprob/density.hpp"
#include "chordprob/monte_carlo.hpp"
#include "chordprob/quadrature.hpp"

namespace {

using chordprob::GeneralProblem;

void BM_MonteCarloSerial(benchmark::State& state) {
  const GeneralProblem prob;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordprob::count_successes_serial(prob, n, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const GeneralProblem prob;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(chordprob::count_successes(prob, n, 1, workers));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DensitySerial(benchmark::State& state) {
  const GeneralProblem prob(chordprob::TriangleSpec(2.0, 1.5), 0.9);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordprob::density_profile_serial(prob, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DensityParallel(benchmark::State& state) {
  const GeneralProblem prob(chordprob::TriangleSpec(2.0, 1.5), 0.9);
  const auto n = static_cast<std::size_t>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(chordprob::density_profile(prob, n, workers));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Quadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chordprob::probability_by_quadrature(1e-12));
}

void thread_sweep(benchmark::internal::Benchmark* b, std::int64_t n) {
  for (int w = 1; w <= omp_get_num_procs(); w *= 2) b->Args({n, w});
}

}  // namespace

BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)
    ->Apply([](auto* b) { thread_sweep(b, 1 << 20); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_DensitySerial)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityParallel)
    ->Apply([](auto* b) { thread_sweep(b, 4096); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
