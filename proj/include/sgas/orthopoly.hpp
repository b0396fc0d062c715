#pragma once

#include <span>
#include <vector>

namespace sgas {

/// Monic three-term recurrence p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x),
/// with b_0 holding the total mass of the weight.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;

  int size() const { return static_cast<int>(a.size()); }
};

/// Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1]; coefficients k = 0..count-1.
Recurrence jacobi_recurrence(double alpha, double beta, int count);

/// Weight x^p0 (1-x)^p1 on [0, 1].
Recurrence jacobi_recurrence_unit(double p0, double p1, int count);

/// Evaluates the orthonormal polynomials q_0..q_{n-1} of a recurrence at x.
/// Requires rec.size() >= n.
void orthonormal_values(const Recurrence& rec, double x, std::span<double> out);

/// Orthonormal basis for x^lambda1 (1-x)^lambda2 on [0,1], the Jacobi
/// ensemble one-body weight.
class JacobiBasis {
 public:
  JacobiBasis(double lambda1, double lambda2, int size);

  int size() const { return size_; }
  void evaluate(double x, std::span<double> out) const { orthonormal_values(rec_, x, out); }
  const Recurrence& recurrence() const { return rec_; }

 private:
  int size_;
  Recurrence rec_;
};

}  // namespace sgas
