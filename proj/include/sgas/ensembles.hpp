#pragma once

#include <vector>

#include "sgas/exact.hpp"
#include "sgas/rng.hpp"

namespace sgas {

struct RecurrenceStep {
  double w0;
  double w1;
  double w2;
};

/// Random coefficients of the three-term recurrence
///   A_0 = 1, A_1 = x - b1,
///   A_j = (w2 (x-1) + w0 x) A_{j-1} + w1 x (x-1) A_{j-2},  j = 2..n,
/// whose degree-n member has JUE(1/2,1/2) distributed zeros.
struct RecurrenceDraw {
  double b1 = 0.5;
  std::vector<RecurrenceStep> steps;  ///< steps[j-2] for j = 2..n

  int degree() const { return static_cast<int>(steps.size()) + 1; }

  /// A_j(x) for 0 <= j <= degree().
  double evaluate(int j, double x) const;
  double evaluate(double x) const { return evaluate(degree(), x); }
};

/// b1 ~ Beta(n+1/2, n+1/2); a, c ~ Gamma(n-j+3/2, 1), b ~ Gamma(j-1, 1).
RecurrenceDraw draw_recurrence(int n, RandomSource& rng);

/// Zeros of A_n in increasing order. The zeros of A_j interlace
/// {0, zeros of A_{j-1}, 1}, so each level is found by bisection inside
/// those brackets. Throws SamplingError if a bracket has no sign change.
std::vector<double> recurrence_roots(const RecurrenceDraw& draw);

enum class Provenance { Recurrence, Metropolis };

struct EigenvalueSample {
  std::vector<double> points;
  EnsembleParams params;
  Provenance provenance = Provenance::Recurrence;
  double acceptance_rate = 1.0;
  bool tuning_warning = false;
  int resamples = 0;
};

/// One JUE(1/2,1/2) configuration of n points from the random recurrence.
EigenvalueSample sample_jue_halfhalf(int n, RandomSource& rng);

struct MetropolisOptions {
  int burn_in = 500;
  int thinning = 10;
  double target_acceptance = 0.4;
};

/// One configuration of the lambda = 1 Jacobi ensemble by single-particle
/// Gaussian random-walk Metropolis. The chain starts at arcsine quantiles,
/// adapts its step every 10 burn-in sweeps, then runs
/// max(thinning, sweeps - burn_in) further sweeps at fixed step. The reported
/// acceptance rate covers the second half of burn-in and the production sweeps.
EigenvalueSample sample_jue_metropolis(const EnsembleParams& params, int sweeps, RandomSource& rng,
                                       const MetropolisOptions& options = {});

}  // namespace sgas
