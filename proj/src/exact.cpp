#include "sgas/exact.hpp"

#include <cmath>
#include <numbers>

#include "sgas/errors.hpp"
#include "sgas/specfun.hpp"

namespace sgas {

void EnsembleParams::validate() const {
  if (n < 1) throw DomainError("EnsembleParams: n must be positive");
  if (!(lambda1 > -1.0) || !(lambda2 > -1.0)) throw DomainError("EnsembleParams: lambda1, lambda2 must exceed -1");
  if (lambda != 1.0) throw DomainError("EnsembleParams: only lambda = 1 is supported");
}

void DensityMatrixQuery::validate() const {
  if (N < 1) throw DomainError("DensityMatrixQuery: N must be positive");
  if (!(L > 0.0)) throw DomainError("DensityMatrixQuery: L must be positive");
  if (!(X > 0.0 && X < 1.0) || !(Y > 0.0 && Y < 1.0)) throw DomainError("DensityMatrixQuery: X, Y must lie in (0,1)");
}

double barnes_g_three_halves_fourth() { return std::exp(4.0 * log_barnes_g(1.5)); }

LogMagnitude selberg_closed(int n, double a, double b) {
  if (n < 1) throw DomainError("selberg_closed: n must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("selberg_closed: exponents must exceed -1");
  long double s = 0.0L;
  for (int j = 0; j < n; ++j) {
    s += log_gamma(a + 1.0 + j) + log_gamma(b + 1.0 + j) + log_gamma(2.0 + j) - log_gamma(a + b + 1.0 + n + j);
  }
  return LogMagnitude::from_log(static_cast<double>(s));
}

LogMagnitude selberg_closed(const EnsembleParams& params) {
  params.validate();
  return selberg_closed(params.n, params.lambda1, params.lambda2);
}

double selberg_continued(double n, double a, double b) {
  if (!(n >= 0.0)) throw DomainError("selberg_continued: n must be nonnegative");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("selberg_continued: exponents must exceed -1");
  return log_barnes_g(n + 1.0 + a) - log_barnes_g(1.0 + a) + log_barnes_g(n + 1.0 + b) - log_barnes_g(1.0 + b) +
         log_barnes_g(n + 1.0 + a + b) - log_barnes_g(2.0 * n + 1.0 + a + b) + log_barnes_g(n + 2.0);
}

LogMagnitude morris_closed(const MorrisParams& p) {
  if (p.n < 1) throw DomainError("morris_closed: n must be positive");
  if (!(p.a + p.b > -1.0)) throw DomainError("morris_closed: a + b must exceed -1");
  LogMagnitude out = LogMagnitude::from_log(0.0);
  for (int j = 0; j < p.n; ++j) {
    out *= LogMagnitude::from_log(log_gamma(p.a + p.b + 1.0 + j) + log_gamma(2.0 + j));
    out *= reciprocal_gamma(p.a + 1.0 + j);
    out *= reciprocal_gamma(p.b + 1.0 + j);
  }
  return out;
}

LogMagnitude mehta_volume(int m_half) {
  if (m_half < 1) throw DomainError("mehta_volume: m_half must be positive");
  const double m = 2.0 * m_half;
  return LogMagnitude::from_log(0.25 * m * std::log(2.0 * std::numbers::pi) + log_barnes_g(0.5 * m + 2.0));
}

LogMagnitude duality_constant_A(const EnsembleParams& params, int m) {
  params.validate();
  if (m < 1) throw DomainError("duality_constant_A: m must be positive");
  const double eta1 = params.lambda2;
  const double eta2 = params.lambda1 + params.n;
  LogMagnitude a = selberg_closed(params.n, params.lambda1, params.lambda2 + m);
  a /= selberg_closed(params.n, params.lambda1, params.lambda2);
  a *= morris_closed({m, 0.0, 0.0});
  const LogMagnitude denom = morris_closed({m, eta2, eta1});
  if (denom.is_zero()) throw DomainError("duality_constant_A: Morris normalization vanishes");
  a /= denom;
  return a;
}

double asymptotic_partition_ratio(int n, double q, double t, const EnsembleParams& params) {
  (void)params;
  if (n < 1) throw DomainError("asymptotic_partition_ratio: n must be positive");
  if (!(q >= 0.0)) throw DomainError("asymptotic_partition_ratio: q must be nonnegative");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("asymptotic_partition_ratio: t must lie in (0,1)");
  const double lg = -q * std::log(std::numbers::pi) + 2.0 * log_barnes_g(q + 1.0) - log_barnes_g(2.0 * q + 1.0) +
                    (q * q - q) * std::log(2.0 * n) - 0.5 * q * q * std::log(t * (1.0 - t));
  return std::exp(lg);
}

double density_matrix_asymptote(const DensityMatrixQuery& query) {
  query.validate();
  if (query.X == query.Y) throw DomainError("density_matrix_asymptote: X == Y is a singular point");
  const double X = query.X;
  const double Y = query.Y;
  return query.rho() * barnes_g_three_halves_fourth() / std::sqrt(2.0 * query.N) *
         std::pow(X * (1.0 - X) * Y * (1.0 - Y), 0.125) / std::sqrt(std::fabs(X - Y));
}

double occupation_number(int j, int N) {
  if (j < 0) throw DomainError("occupation_number: j must be nonnegative");
  if (N < 1) throw DomainError("occupation_number: N must be positive");
  const double ratio = std::exp(log_gamma(j + 0.5) - log_gamma(j + 1.0)) / std::sqrt(std::numbers::pi);
  return barnes_g_three_halves_fourth() * ratio * std::sqrt(static_cast<double>(N));
}

double barnes_ratio_asymptote(int n, double a, double b) {
  if (n < 1) throw DomainError("barnes_ratio_asymptote: n must be positive");
  const double ln_n = std::log(static_cast<double>(n));
  return (b - a) * n + 0.5 * (a - b) * std::log(2.0 * std::numbers::pi) + ((a - b) * n + 0.5 * (a * a - b * b)) * ln_n;
}

double barnes_ratio_exact(int n, double a, double b) {
  if (n < 1) throw DomainError("barnes_ratio_exact: n must be positive");
  return log_barnes_g(n + 1.0 + a) - log_barnes_g(n + 1.0 + b);
}

}  // namespace sgas
