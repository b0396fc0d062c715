#include "sgas/linalg.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "sgas/errors.hpp"

namespace sgas {

double DeterminantValue::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

DeterminantValue log_determinant(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DomainError("log_determinant: matrix must be square");
  DeterminantValue out;
  out.size = static_cast<int>(a.rows());
  if (a.rows() == 0) return out;
  if (!a.allFinite()) throw EvaluationError("log_determinant: non-finite matrix entry");

  Eigen::MatrixXd scaled = a;
  long double log_scale = 0.0L;
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
    const double r = scaled.row(i).cwiseAbs().maxCoeff();
    if (r == 0.0) return {-std::numeric_limits<double>::infinity(), 0, out.size};
    // Power-of-two scaling keeps the entries exact.
    int e = 0;
    std::frexp(r, &e);
    scaled.row(i) = scaled.row(i) * std::ldexp(1.0, -e);
    log_scale += e * std::log(2.0L);
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(scaled);
  const Eigen::MatrixXd& m = lu.matrixLU();
  long double log_abs = log_scale;
  int sign = static_cast<int>(std::lround(lu.permutationP().determinant()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double d = m(i, i);
    if (d == 0.0) return {-std::numeric_limits<double>::infinity(), 0, out.size};
    if (d < 0.0) sign = -sign;
    log_abs += std::log(std::fabs(static_cast<long double>(d)));
  }
  out.log_abs = static_cast<double>(log_abs);
  out.sign = sign;
  return out;
}

DeterminantValue log_determinant_hermitian(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw DomainError("log_determinant_hermitian: matrix must be square");
  DeterminantValue out;
  out.size = static_cast<int>(a.rows());
  if (a.rows() == 0) return out;
  if (!a.allFinite()) throw EvaluationError("log_determinant_hermitian: non-finite matrix entry");
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const Eigen::MatrixXcd& m = lu.matrixLU();
  long double log_abs = 0.0L;
  double phase = lu.permutationP().determinant() < 0 ? std::numbers::pi : 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const std::complex<double> d = m(i, i);
    if (d == 0.0) return {-std::numeric_limits<double>::infinity(), 0, out.size};
    log_abs += std::log(static_cast<long double>(std::abs(d)));
    phase += std::arg(d);
  }
  phase = std::remainder(phase, 2.0 * std::numbers::pi);
  const double off = std::min(std::fabs(phase), std::numbers::pi - std::fabs(phase));
  if (off > 1e-6) throw EvaluationError("log_determinant_hermitian: determinant is not real", phase, off);
  out.log_abs = static_cast<double>(log_abs);
  out.sign = std::fabs(phase) < 0.5 * std::numbers::pi ? 1 : -1;
  return out;
}

}  // namespace sgas
