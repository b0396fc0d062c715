#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace sgas {

struct Interval {
  double lo;
  double hi;
};

struct LegendreKind {};
/// Weight (hi - x)^alpha (x - lo)^beta, the classical (1-x)^alpha (1+x)^beta on [-1,1].
struct JacobiKind {
  double alpha;
  double beta;
};
struct PeriodicTrapezoidKind {};
/// Union of several panels; weights already include any extracted factors.
struct CompositeKind {};

using RuleKind = std::variant<LegendreKind, JacobiKind, PeriodicTrapezoidKind, CompositeKind>;

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval domain{-1.0, 1.0};
  RuleKind kind = LegendreKind{};

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  double integrate(F&& f) const {
    long double s = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return static_cast<double>(s);
  }

  /// Affine map onto [lo, hi], rescaling weights consistently with the kind.
  QuadratureRule mapped(double lo, double hi) const;

  /// Total mass of the weight over the domain.
  double mass() const;
};

/// Gauss rule on [-1,1] for Legendre or Jacobi(alpha, beta) weight. Nodes
/// come from the Jacobi matrix eigenvalues and are then Newton-polished on
/// the orthonormal recurrence; weights use the Christoffel sum 1/sum q_k^2.
QuadratureRule gauss_rule(const RuleKind& kind, int order);

/// Gauss–Jacobi rule for the weight (x - lo)^p_lo (hi - x)^p_hi on [lo, hi].
QuadratureRule gauss_jacobi_interval(int order, double lo, double hi, double p_lo, double p_hi);

/// Gauss–Legendre on [lo, hi].
QuadratureRule gauss_legendre(int order, double lo, double hi);

/// Equal-weight midpoint trapezoid on (-pi, pi).
QuadratureRule periodic_trapezoid(int points);

/// Concatenate rules into a composite rule (panels must not overlap).
QuadratureRule composite(std::span<const QuadratureRule> panels);

using MultiFunction = std::function<double(std::span<const double>)>;

/// Tensor-product sum over d <= 3 axes, one rule per axis.
double tensor_integrate(const MultiFunction& f, int d, std::span<const QuadratureRule> rules);

/// Integral of f over (-pi,pi)^m, m <= 3, by the midpoint trapezoid rule.
double periodic_integrate(const MultiFunction& f, int m, int points_per_axis);

struct InteriorSingularity {
  double location;  ///< s in (0,1)
  double exponent;  ///< power on |s - y|, > -1
};

/// smooth(y) * |s - y|^exponent * y^p0 * (1-y)^p1 on (0,1).
struct SingularIntegrand {
  std::function<double(double)> smooth;
  std::optional<InteriorSingularity> interior;
  double p0 = 0.0;
  double p1 = 0.0;
};

struct CertifiedValue {
  double value;
  double error;  ///< |I(order) - I(order/2)| at the accepted order
  int order;     ///< Gauss points per panel
};

/// Splits at the interior singularity and absorbs both power laws of each
/// panel into a Gauss–Jacobi rule, so the remaining factor is smooth. The
/// order doubles from 16 until consecutive values agree to
/// tol * max(1, |value|); throws EvaluationError beyond 1024 points.
CertifiedValue singular_integrate(const SingularIntegrand& s, double tol);

/// PV of int_0^1 h'(y) sqrt(y(1-y)) / (x - y) dy, with
/// h'(y) = sum_i u_coeffs[i] U_i(2y - 1). Evaluated per basis element from
/// PV int_{-1}^{1} sqrt(1-t^2) U_{k-1}(t) / (t - s) dt = -pi T_k(s).
double principal_value_airfoil(std::span<const double> u_coeffs, double x);

/// Chebyshev-U coefficients (in 2y-1) of h'(y) for h given by power
/// coefficients in y: h(y) = sum_k h[k] y^k.
std::vector<double> derivative_u_coeffs(std::span<const double> power_coeffs);

/// Chebyshev T_k(s) and U_k(s).
double chebyshev_t(int k, double s);
double chebyshev_u(int k, double s);

}  // namespace sgas
