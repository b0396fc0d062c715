#pragma once

#include <functional>
#include <vector>

#include "sgas/quadrature.hpp"

namespace sgas {

/// Kernel |X - Y|^{-nu} acting on sources weighted by [Y(1-Y)]^{weight_exponent}.
struct KernelSpec {
  double nu = 0.5;
  double weight_exponent = -0.25;
};

/// int_0^1 f(Y) |X - Y|^{-nu} [Y(1-Y)]^{weight_exponent} dY.
CertifiedValue apply_kernel(const KernelSpec& spec, const std::function<double(double)>& f, double X, double tol);

/// Natural orbital phi_j on a box of length L (X is the scaled coordinate).
struct Orbital {
  int j = 0;
  double L = 1.0;
  double normalization = 1.0;

  double operator()(double X) const;
};

Orbital orbital(int j, double L = 1.0);

/// (L/pi) int_0^1 phi_a phi_b dX / sqrt(X(1-X)), exact by Gauss–Jacobi.
double orbital_inner_product(const Orbital& a, const Orbital& b);

/// sqrt(2 pi) Γ(j+1/2) / j!
double scaled_occupation(int j);

struct OrbitalSpectrumEntry {
  int j;
  double occupation;
  double scaled_occupation;
  double normalization;
};

std::vector<OrbitalSpectrumEntry> orbital_spectrum(int j_max, int N, double L = 1.0);

/// Projects |X - Y|^{-1/2} and its Gegenbauer expansion onto C_k^{1/4}(2Y-1)
/// under [Y(1-Y)]^{-1/4} for k <= j_max and returns the largest residual
/// |left - right| / max(1, |right|).
double verify_expansion_identity(int j_max, double X);

/// Kernel applied to the Porter–Stirling source (1/pi) cos(pi nu/2) [t(1-t)]^{(nu-1)/2}.
double porter_stirling_value(double nu, double X);

/// Γ(3/4)/Γ(5/4) Γ(j+1/2)/j!
double appendix_omega(int j);

/// S_j(z) = sum_k (-j)_k (j+1/2)_k / (k! (3/4)_k) z^{1/4} 2F1(1/4-k, 3/4; 5/4; z).
double appendix_s(int j, double z);

/// (L S_j)(z) with L = z(1-z) d²/dz² - (3/4)(2z-1) d/dz, applied term by
/// term in closed form through the 2F1 parameter-shift rules.
double appendix_l_applied(int j, double z);

/// d/dz [z^{1/4} 2F1(1/4-k, 3/4; 5/4; z)] = (1/4) z^{-3/4} 2F1(1/4-k, 3/4; 1/4; z).
double appendix_derivative(int k, double z);

struct ContiguityCheck {
  double lhs;
  double rhs;
  double scale;  ///< sum of the magnitudes of all terms, for relative comparison
};

/// Both sides of the two contiguity relations used for the L eigenrelation.
ContiguityCheck contiguity_first(int k, double z);
ContiguityCheck contiguity_second(int k, double z);

}  // namespace sgas
