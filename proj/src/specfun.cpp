#include "sgas/specfun.hpp"

#include <math.h>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sgas/errors.hpp"

namespace sgas {

LogMagnitude& LogMagnitude::operator/=(const LogMagnitude& o) {
  if (o.sign == 0) throw DomainError("LogMagnitude: division by zero");
  if (sign == 0) return *this;
  log_abs -= o.log_abs;
  sign *= o.sign;
  return *this;
}

namespace {

// glibc's lgamma writes the global signgam; the _r variants do not.
long double lgamma_ld(long double x, int* sign) {
#if defined(__GLIBC__)
  return ::lgammal_r(x, sign);
#else
  *sign = (x > 0 || std::fmod(std::floor(x), 2.0L) != 0) ? 1 : -1;
  return std::lgamma(x);
#endif
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

constexpr long double kZetaPrimeMinusOne = -0.1654211437004509292139196602427L;

// ln G(w + 1) for w >= 20.
long double log_barnes_g_asymptotic(long double w) {
  // B_{2k+2} / (4k(k+1)), k = 1..6
  constexpr std::array<long double, 6> coeff = {
      (-1.0L / 30.0L) / 8.0L,       (1.0L / 42.0L) / 24.0L,  (-1.0L / 30.0L) / 48.0L,
      (5.0L / 66.0L) / 80.0L,       (-691.0L / 2730.0L) / 120.0L,
      (7.0L / 6.0L) / 168.0L};
  const long double lw = std::log(w);
  const long double inv2 = 1.0L / (w * w);
  long double series = 0.0L;
  long double p = inv2;
  for (long double c : coeff) {
    series += c * p;
    p *= inv2;
  }
  return 0.5L * w * w * lw - 0.75L * w * w + 0.5L * w * std::log(2.0L * std::numbers::pi_v<long double>) -
         lw / 12.0L + kZetaPrimeMinusOne + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  int s = 1;
#if defined(__GLIBC__)
  return ::lgamma_r(x, &s);
#else
  return std::lgamma(x);
#endif
}

LogMagnitude gamma_lm(double x) {
  if (std::isnan(x)) throw DomainError("gamma_lm: NaN argument");
  if (is_nonpositive_integer(x)) return {std::numeric_limits<double>::infinity(), 1};
  int s = 1;
  const double la = static_cast<double>(lgamma_ld(x, &s));
  return {la, s};
}

LogMagnitude reciprocal_gamma(double x) {
  if (std::isnan(x)) throw DomainError("reciprocal_gamma: NaN argument");
  if (is_nonpositive_integer(x)) return LogMagnitude::zero();
  const LogMagnitude g = gamma_lm(x);
  return {-g.log_abs, g.sign};
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

double log_barnes_g(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("log_barnes_g: argument must be positive and finite, got " + std::to_string(z));
  }
  if (z == std::floor(z) && z <= 1.0e6) {
    // G(n) = prod_{k=0}^{n-2} k!
    const auto n = static_cast<long>(z);
    long double log_fact = 0.0L;
    long double acc = 0.0L;
    for (long k = 2; k <= n - 2; ++k) {
      log_fact += std::log(static_cast<long double>(k));
      acc += log_fact;
    }
    return static_cast<double>(acc);
  }
  constexpr long double kShiftTarget = 20.0L;
  long double x = z;
  long double shift_sum = 0.0L;
  int s = 1;
  while (x < kShiftTarget + 1.0L) {
    shift_sum += lgamma_ld(x, &s);
    x += 1.0L;
  }
  // G(x) = G((x-1)+1)
  return static_cast<double>(log_barnes_g_asymptotic(x - 1.0L) - shift_sum);
}

double pochhammer(double a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

double gauss_2f1(const HypergeometricArgs& args) {
  const auto [a, b, c, z] = args;
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z)) {
    throw DomainError("gauss_2f1: NaN argument");
  }
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c must not be zero or a negative integer");
  const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminating) {
    if (!(std::fabs(z) <= 0.95)) {
      throw EvaluationError("gauss_2f1: non-terminating series requires |z| <= 0.95 (a=" + std::to_string(a) +
                            ", b=" + std::to_string(b) + ", c=" + std::to_string(c) + ", z=" + std::to_string(z) +
                            ")");
    }
  }
  if (z == 0.0) return 1.0;
  constexpr int kMaxTerms = 20000;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < kMaxTerms; ++k) {
    const long double ak = a + k;
    const long double bk = b + k;
    if (ak == 0.0L || bk == 0.0L) return static_cast<double>(sum);
    term *= ak * bk / ((c + k) * (k + 1.0L)) * z;
    sum += term;
    if (!terminating && std::fabs(term) <= 1e-19L * std::fabs(sum) && k > 2) return static_cast<double>(sum);
  }
  throw EvaluationError("gauss_2f1: series did not converge", static_cast<double>(sum), static_cast<double>(term));
}

double gegenbauer(int j, double alpha, double x) {
  if (j < 0) throw DomainError("gegenbauer: degree must be nonnegative");
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * x;
  for (int k = 2; k <= j; ++k) {
    const double next = (2.0 * (k + alpha - 1.0) * x * cur - (k + 2.0 * alpha - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_quarter(int j, double x) {
  if (!(std::fabs(x) <= 1.0)) throw DomainError("gegenbauer_quarter: |x| must be <= 1");
  return gegenbauer(j, 0.25, x);
}

}  // namespace sgas
