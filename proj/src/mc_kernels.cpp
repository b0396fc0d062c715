#include "sgas/mc_kernels.hpp"

#include <omp.h>

#include <cmath>
#include <string>

#include "sgas/ensembles.hpp"
#include "sgas/errors.hpp"

namespace sgas {

double density_matrix_sample(const DensityMatrixJob& job, std::uint64_t index, SampleDiagnostics* diag) {
  RandomSource rng(RngStream{job.master_seed, index});
  EigenvalueSample s;
  if (job.boundary == Boundary::Dirichlet) {
    s = sample_jue_halfhalf(job.N, rng);
  } else {
    s = sample_jue_metropolis(EnsembleParams{job.N, -0.5, -0.5, 1.0}, job.metropolis_sweeps, rng);
  }
  if (diag) {
    diag->resamples += s.resamples;
    diag->tuning_warnings += s.tuning_warning ? 1 : 0;
  }
  double log_prod = 0.0;
  for (double x : s.points) log_prod += std::log(std::fabs(4.0 * job.X - 4.0 * x) * std::fabs(4.0 * job.Y - 4.0 * x));
  return std::exp(log_prod);
}

std::vector<double> density_matrix_samples_serial(const DensityMatrixJob& job, int m, SampleDiagnostics* diag) {
  if (m < 1) throw DomainError("density_matrix_samples_serial: m must be positive");
  std::vector<double> out(m);
  for (int k = 0; k < m; ++k) out[k] = density_matrix_sample(job, static_cast<std::uint64_t>(k), diag);
  return out;
}

std::vector<double> density_matrix_samples_parallel(const DensityMatrixJob& job, int m, int threads,
                                                    SampleDiagnostics* diag) {
  if (m < 1) throw DomainError("density_matrix_samples_parallel: m must be positive");
  if (threads < 1) throw DomainError("density_matrix_samples_parallel: threads must be positive");
  std::vector<double> out(m);
  long resamples = 0;
  long warnings = 0;
  bool failed = false;
  std::string message;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) reduction(+ : resamples, warnings)
  for (int k = 0; k < m; ++k) {
    SampleDiagnostics local;
    try {
      out[k] = density_matrix_sample(job, static_cast<std::uint64_t>(k), &local);
    } catch (const std::exception& e) {
#pragma omp critical(sgas_mc_error)
      {
        failed = true;
        message = e.what();
      }
    }
    resamples += local.resamples;
    warnings += local.tuning_warnings;
  }
  if (failed) throw SamplingError(message);
  if (diag) {
    diag->resamples += resamples;
    diag->tuning_warnings += warnings;
  }
  return out;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

SampleSummary summarize(std::span<const double> v) {
  if (v.size() < 2) throw DomainError("summarize: need at least two samples");
  const double n = static_cast<double>(v.size());
  const double mean = pairwise_sum(v) / n;
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  const double var = pairwise_sum(sq) / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

}  // namespace sgas
