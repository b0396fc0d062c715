#include "sgas/orthopoly.hpp"

#include <cmath>

#include "sgas/errors.hpp"
#include "sgas/specfun.hpp"

namespace sgas {

Recurrence jacobi_recurrence(double alpha, double beta, int count) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_recurrence: exponents must exceed -1");
  if (count < 1) throw DomainError("jacobi_recurrence: count must be positive");
  Recurrence rec;
  rec.a.resize(count);
  rec.b.resize(count);
  const double ab = alpha + beta;
  rec.b[0] = std::exp((ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                      log_gamma(ab + 2.0));
  rec.a[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double s = 2.0 * k + ab;
    rec.a[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (k == 1) {
      rec.b[k] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      rec.b[k] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return rec;
}

Recurrence jacobi_recurrence_unit(double p0, double p1, int count) {
  // x = (1+u)/2 maps [-1,1] to [0,1]; the weight (1-u)^p1 (1+u)^p0 picks up 2^{-(p0+p1+1)}.
  Recurrence rec = jacobi_recurrence(p1, p0, count);
  rec.b[0] = std::exp(log_beta(p0 + 1.0, p1 + 1.0));
  for (int k = 0; k < count; ++k) {
    rec.a[k] = 0.5 * (1.0 + rec.a[k]);
    if (k > 0) rec.b[k] *= 0.25;
  }
  return rec;
}

void orthonormal_values(const Recurrence& rec, double x, std::span<double> out) {
  const int n = static_cast<int>(out.size());
  if (n == 0) return;
  if (rec.size() < n) throw DomainError("orthonormal_values: recurrence too short");
  out[0] = 1.0 / std::sqrt(rec.b[0]);
  if (n == 1) return;
  out[1] = (x - rec.a[0]) * out[0] / std::sqrt(rec.b[1]);
  for (int k = 1; k + 1 < n; ++k) {
    out[k + 1] = ((x - rec.a[k]) * out[k] - std::sqrt(rec.b[k]) * out[k - 1]) / std::sqrt(rec.b[k + 1]);
  }
}

JacobiBasis::JacobiBasis(double lambda1, double lambda2, int size)
    : size_(size), rec_(jacobi_recurrence_unit(lambda1, lambda2, size + 1)) {}

}  // namespace sgas
