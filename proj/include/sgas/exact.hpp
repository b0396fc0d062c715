#pragma once

#include "sgas/log_magnitude.hpp"

namespace sgas {

/// Jacobi ensemble x^lambda1 (1-x)^lambda2 |Δ(x)|^{2/lambda} on [0,1]^n.
struct EnsembleParams {
  int n = 1;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda = 1.0;

  double beta() const { return 2.0 / lambda; }

  /// Throws DomainError on n < 1, lambda_i <= -1, or lambda != 1.
  void validate() const;
};

struct MorrisParams {
  int n = 1;
  double a = 0.0;
  double b = 0.0;
};

enum class Boundary { Dirichlet, Neumann };

struct DensityMatrixQuery {
  int N = 1;
  double L = 1.0;
  double X = 0.25;
  double Y = 0.75;
  Boundary boundary = Boundary::Dirichlet;

  double rho() const { return N / L; }
  void validate() const;
};

/// G(3/2)^4, the ground-state occupation constant.
double barnes_g_three_halves_fourth();

/// ln S_n(a, b, 1).
LogMagnitude selberg_closed(int n, double a, double b);
LogMagnitude selberg_closed(const EnsembleParams& params);

/// ln S_n(a, b, 1) for real n >= 0 through Barnes G; agrees with
/// selberg_closed at integer n.
double selberg_continued(double n, double a, double b);

/// ln M_n(a, b, 1). Zero (sign 0) when a gamma in the denominator has a pole.
LogMagnitude morris_closed(const MorrisParams& p);

/// ln V_{m/2} with m = 2 m_half.
LogMagnitude mehta_volume(int m_half);

/// Constant A of the Jacobi to circular duality for an m-th power insertion.
LogMagnitude duality_constant_A(const EnsembleParams& params, int m);

double asymptotic_partition_ratio(int n, double q, double t, const EnsembleParams& params);

double density_matrix_asymptote(const DensityMatrixQuery& query);

/// λ_j = G(3/2)^4 Γ(j+1/2) / (√π j!) · √N.
double occupation_number(int j, int N);

/// Large-n form of ln[G(n+1+a)/G(n+1+b)].
double barnes_ratio_asymptote(int n, double a, double b);

/// ln G(n+1+a) - ln G(n+1+b), evaluated directly.
double barnes_ratio_exact(int n, double a, double b);

}  // namespace sgas
