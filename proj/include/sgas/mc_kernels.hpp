#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgas/exact.hpp"

namespace sgas {

/// What one Monte Carlo sample computes: the product
///   prod_l |4X - 4x_l| |4Y - 4x_l|
/// over an N-point configuration drawn with the weight matching `boundary`
/// (recurrence sampler for Dirichlet, Metropolis for Neumann).
struct DensityMatrixJob {
  Boundary boundary = Boundary::Dirichlet;
  int N = 1;
  double X = 0.25;
  double Y = 0.75;
  std::uint64_t master_seed = 0;
  int metropolis_sweeps = 510;
};

struct SampleDiagnostics {
  long resamples = 0;
  long tuning_warnings = 0;
};

/// Per-sample value for stream index `index`, accumulated in log space.
double density_matrix_sample(const DensityMatrixJob& job, std::uint64_t index, SampleDiagnostics* diag = nullptr);

/// Reference loop over samples 0..m-1.
std::vector<double> density_matrix_samples_serial(const DensityMatrixJob& job, int m,
                                                  SampleDiagnostics* diag = nullptr);

/// OpenMP version; each sample owns its output slot and RNG stream, so the
/// result is identical to the serial loop for any thread count.
std::vector<double> density_matrix_samples_parallel(const DensityMatrixJob& job, int m, int threads,
                                                    SampleDiagnostics* diag = nullptr);

/// Fixed-order pairwise summation.
double pairwise_sum(std::span<const double> v);

struct SampleSummary {
  double mean;
  double std_error;  ///< sample standard deviation / sqrt(count)
};

SampleSummary summarize(std::span<const double> v);

}  // namespace sgas
