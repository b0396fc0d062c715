#pragma once

#include <vector>

#include "sgas/exact.hpp"
#include "sgas/linalg.hpp"

namespace sgas {

struct Singularity {
  double location;  ///< y_r in (0,1) for Hankel symbols, phi_r in (-pi, pi] for Toeplitz
  double strength;  ///< q_r or a_r, >= 0
};

/// Symbol with algebraic singularities and no jumps.
struct SymbolSpec {
  std::vector<double> h_coeffs;  ///< Hankel smooth part h(x) = sum_k h[k] x^k
  std::vector<double> g_coeffs;  ///< Toeplitz smooth part g(θ) = g_0 + 2 sum_{p>=1} g_p cos(pθ)
  std::vector<Singularity> singularities;

  double h(double x) const;
  double g(double theta) const;
  double total_charge() const;
};

/// H_n[e^h prod_r |y_r - x|^{2 q_r}] for the weight x^lambda1 (1-x)^lambda2,
/// as S_n times a Gram determinant in the orthonormal Jacobi basis.
DeterminantValue hankel_determinant(const EnsembleParams& params, const SymbolSpec& symbol, int n);

/// ln of the charge-balanced ratio
///   prod_r y_r^{lambda1 q_r} (1-y_r)^{lambda2 q_r} H_n[symbol] / H_{n+Q}[1],
/// with H_{n+Q}[1] continued to non-integer n+Q.
double jacobi_fh_exact_log(const EnsembleParams& params, const SymbolSpec& symbol, int n);

/// ln of the conjectured large-n form of the ratio above.
double jacobi_fh_asymptote(const EnsembleParams& params, const SymbolSpec& symbol, int n);

/// D_N[e^{g} prod_r |e^{iθ} - e^{iφ_r}|^{2 a_r}].
DeterminantValue toeplitz_determinant(const SymbolSpec& symbol, int N);

/// N g_0 + sum a_r^2 ln N + ln E.
double toeplitz_fh_asymptote(const SymbolSpec& symbol, int N);

struct DriftRow {
  int n;
  double exact_log;
  double predicted_log;
  double delta;
};

struct DriftReport {
  std::vector<DriftRow> rows;
  bool decreasing_last3 = false;  ///< |δ| strictly decreasing over the last three sizes
  bool decreasing_all = false;    ///< |δ| strictly decreasing over every size
  double final_abs = 0.0;
};

DriftReport fh_drift_report(const std::vector<std::pair<int, double>>& exact_logs,
                            const std::vector<double>& predicted_logs);

}  // namespace sgas
