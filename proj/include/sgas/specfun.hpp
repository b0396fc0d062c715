#pragma once

#include "sgas/log_magnitude.hpp"

namespace sgas {

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// Γ(x) in log-magnitude form for any real x; poles map to an infinite
/// magnitude, so use reciprocal_gamma when a pole may appear in a denominator.
LogMagnitude gamma_lm(double x);

/// 1/Γ(x) in log-magnitude form; exactly zero at the poles x = 0, -1, -2, ...
LogMagnitude reciprocal_gamma(double x);

double log_beta(double a, double b);

/// ln G(z) for the Barnes G-function, z > 0.
///
/// Positive integers are summed exactly as ln G(n) = sum_{k<n-1} ln k!.
/// Otherwise the argument is shifted upward with G(z+1) = Γ(z) G(z) until it
/// exceeds 20 and the large-argument expansion (Glaisher–Kinkelin constant
/// plus six Bernoulli corrections) is applied. Intermediate sums use long
/// double.
double log_barnes_g(double z);

/// Rising factorial (a)_k.
double pochhammer(double a, int k);

struct HypergeometricArgs {
  double a;
  double b;
  double c;
  double z;
};

/// Gauss 2F1 by direct series. Terminating cases (a or b a nonpositive
/// integer) are summed exactly; otherwise |z| <= 0.95 is required.
double gauss_2f1(const HypergeometricArgs& args);

/// Gegenbauer C_j^alpha(x) via the three-term recurrence.
double gegenbauer(int j, double alpha, double x);

/// C_j^{1/4}(x), the orbital polynomials.
double gegenbauer_quarter(int j, double x);

}  // namespace sgas
