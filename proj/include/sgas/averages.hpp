#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "sgas/exact.hpp"
#include "sgas/log_magnitude.hpp"
#include "sgas/quadrature.hpp"

namespace sgas {

struct Charge {
  double position;
  double q;
};

/// Singular insertions |X_r - x|^{2 q_r}. Zero charges are allowed and drop out.
struct ChargeConfig {
  std::vector<Charge> charges;

  double total_charge() const;
  /// Positions in (0,1), pairwise distinct, q >= 0.
  void validate() const;
};

/// prod_r (t_r - x)^m with t_r the charge positions (charge strengths unused).
struct SignedPower {
  int m = 1;
};
/// prod_r |y_r - x|^{2 q_r}.
struct AbsolutePower {};
using InsertionMode = std::variant<SignedPower, AbsolutePower>;

/// Quadrature rule on [0,1] whose weights carry the whole one-body factor
/// x^lambda1 (1-x)^lambda2 prod_r |y_r - x|^{2 q_r}. Panels are split at the
/// charges and every panel-end power is absorbed into a Gauss–Jacobi rule.
QuadratureRule charged_weight_rule(double lambda1, double lambda2, const ChargeConfig& charges, int order);

/// Ensemble average <prod_l f(x_l)> written as the Gram determinant
/// det[ sum_i W_i q_j(x_i) q_k(x_i) f(x_i) ], with q_j orthonormal for the
/// bare Jacobi weight and W_i the weights of `rule` (which must already carry
/// x^lambda1 (1-x)^lambda2 and any singular factors of f). Equal to the
/// moment-Hankel ratio det[mu_{j+k}] / det[mu0_{j+k}].
LogMagnitude gram_average(const EnsembleParams& params, const QuadratureRule& rule,
                          const std::vector<double>& extra_factor = {});

/// Tensor-quadrature value of the ensemble average of prod_l prod_r f(y_r - x_l),
/// normalized by the closed-form Selberg integral. n <= 3.
double average_product_bruteforce(const EnsembleParams& params, const ChargeConfig& charges,
                                  const InsertionMode& mode);

/// <prod_l (t - x_l)^m> through the Gram determinant.
LogMagnitude average_even_power_heine(const EnsembleParams& params, double t, int m);

/// <prod_l prod_r |y_r - x_l|^{2 q_r}> through the Gram determinant, with
/// the moment quadrature checked by order doubling.
LogMagnitude average_charges_heine(const EnsembleParams& params, const ChargeConfig& charges);

struct DualityCase {
  int n = 2;
  int m = 2;
  double t = 0.5;
  EnsembleParams params;

  void validate() const;
};

double duality_lhs(const DualityCase& c);

/// Right side as a complex number; its imaginary part should vanish.
std::complex<double> duality_rhs_complex(const DualityCase& c);
double duality_rhs(const DualityCase& c);

/// Prefactors of the charge-balanced partition ratio: prod y^{lambda1 q}(1-y)^{lambda2 q}
/// times prod_{r<s} |y_r - y_s|^{2 q_r q_s}, in log form.
double log_charge_prefactor(const EnsembleParams& params, const ChargeConfig& charges);

/// Z_n(charges) / Z_{n+Q}(no charges) by tensor quadrature, n <= 3.
double partition_ratio_bruteforce(const EnsembleParams& params, const ChargeConfig& charges);

/// Same ratio through the Gram determinant; valid for larger n.
double partition_ratio_heine(const EnsembleParams& params, const ChargeConfig& charges);

struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int m_samples = 0;
  std::uint64_t master_seed = 0;
  long resamples = 0;
  long tuning_warnings = 0;
};

/// Monte Carlo density matrix of the N+1 particle gas at (X,Y).
MCEstimate mc_density_matrix(const DensityMatrixQuery& query, int m_samples, std::uint64_t master_seed,
                             int threads = 1);

/// The Dirichlet estimator at (X, 1-X) in its specialised form
/// (8 rho/(N+1)) X(1-X) mean prod |4(1-X) - 4x| |4X - 4x|.
MCEstimate mc_density_matrix_symmetric(int N, double L, double X, int m_samples, std::uint64_t master_seed,
                                       int threads = 1);

/// Finite-N density matrix from the Gram determinant (no sampling).
double density_matrix_exact(const DensityMatrixQuery& query);

struct Table1Row {
  double X;
  double mc;
  double std_error;
  double asymptote;
  double ratio;        ///< mc / asymptote
  double exact_ratio;  ///< density_matrix_exact / asymptote
};

/// Dirichlet density matrix at (X, 1-X) against the large-N formula.
std::vector<Table1Row> density_matrix_table(int N, int m_samples, std::uint64_t seed, int threads,
                                            const std::vector<double>& xs);

/// X = 0.025, 0.075, ..., 0.475.
std::vector<double> table1_positions();

}  // namespace sgas
