#pragma once

#include <Eigen/Dense>

namespace sgas {

struct DeterminantValue {
  double log_abs = 0.0;
  int sign = 1;  ///< 0 for a singular matrix
  int size = 0;

  double value() const;
};

/// ln|det A| and sign via row equilibration followed by partial-pivot LU.
DeterminantValue log_determinant(const Eigen::MatrixXd& a);

/// Same for a Hermitian matrix, whose determinant is real. Throws
/// EvaluationError if the computed phase is not close to 0 or pi.
DeterminantValue log_determinant_hermitian(const Eigen::MatrixXcd& a);

}  // namespace sgas
