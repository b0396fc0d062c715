#include <benchmark/benchmark.h>

#include "sgas/mc_kernels.hpp"

namespace {

sgas::DensityMatrixJob table1_job() {
  sgas::DensityMatrixJob job;
  job.boundary = sgas::Boundary::Dirichlet;
  job.N = 14;
  job.X = 0.225;
  job.Y = 0.775;
  job.master_seed = 42;
  return job;
}

void BM_SamplesSerial(benchmark::State& state) {
  const auto job = table1_job();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sgas::density_matrix_samples_serial(job, m));
  state.SetItemsProcessed(state.iterations() * m);
}

void BM_SamplesParallel(benchmark::State& state) {
  const auto job = table1_job();
  const int m = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sgas::density_matrix_samples_parallel(job, m, threads));
  state.SetItemsProcessed(state.iterations() * m);
}

}  // namespace

BENCHMARK(BM_SamplesSerial)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SamplesParallel)
    ->Args({5000, 1})
    ->Args({5000, 2})
    ->Args({5000, 4})
    ->Args({5000, 8})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
