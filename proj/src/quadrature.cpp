#include "sgas/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "sgas/errors.hpp"
#include "sgas/orthopoly.hpp"

namespace sgas {

namespace {

struct JacobiExponents {
  double alpha;
  double beta;
};

JacobiExponents exponents_of(const RuleKind& kind) {
  if (const auto* j = std::get_if<JacobiKind>(&kind)) return {j->alpha, j->beta};
  return {0.0, 0.0};
}

// q_n and q_n' of the orthonormal family at x.
std::pair<double, double> orthonormal_with_derivative(const Recurrence& rec, int n, double x) {
  double q_prev = 0.0;
  double dq_prev = 0.0;
  double q = 1.0 / std::sqrt(rec.b[0]);
  double dq = 0.0;
  double sb_prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sb = std::sqrt(rec.b[k + 1]);
    const double q_next = ((x - rec.a[k]) * q - sb_prev * q_prev) / sb;
    const double dq_next = ((x - rec.a[k]) * dq + q - sb_prev * dq_prev) / sb;
    q_prev = q;
    dq_prev = dq;
    q = q_next;
    dq = dq_next;
    sb_prev = sb;
  }
  return {q, dq};
}

}  // namespace

QuadratureRule QuadratureRule::mapped(double lo, double hi) const {
  const double scale = (hi - lo) / (domain.hi - domain.lo);
  double wscale = scale;
  if (std::holds_alternative<JacobiKind>(kind)) {
    const auto [alpha, beta] = exponents_of(kind);
    wscale = std::pow(scale, 1.0 + alpha + beta);
  }
  QuadratureRule out;
  out.kind = kind;
  out.domain = {lo, hi};
  out.nodes.reserve(nodes.size());
  out.weights.reserve(weights.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes.push_back(lo + (nodes[i] - domain.lo) * scale);
    out.weights.push_back(weights[i] * wscale);
  }
  return out;
}

double QuadratureRule::mass() const {
  long double s = 0.0L;
  for (double w : weights) s += w;
  return static_cast<double>(s);
}

QuadratureRule gauss_rule(const RuleKind& kind, int order) {
  if (order < 1) throw DomainError("gauss_rule: order must be positive");
  if (std::holds_alternative<PeriodicTrapezoidKind>(kind) || std::holds_alternative<CompositeKind>(kind)) {
    throw DomainError("gauss_rule: kind must be Legendre or Jacobi");
  }
  const auto [alpha, beta] = exponents_of(kind);
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_rule: Jacobi exponents must exceed -1");

  const Recurrence rec = jacobi_recurrence(alpha, beta, order + 1);
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 1));
  for (int k = 0; k < order; ++k) diag[k] = rec.a[k];
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(rec.b[k]);

  std::vector<double> x(order);
  if (order == 1) {
    x[0] = rec.a[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(order - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < order; ++i) x[i] = es.eigenvalues()[i];
  }
  std::sort(x.begin(), x.end());

  QuadratureRule rule;
  rule.kind = kind;
  rule.domain = {-1.0, 1.0};
  rule.nodes.resize(order);
  rule.weights.resize(order);
  std::vector<double> q(order);
  for (int i = 0; i < order; ++i) {
    double xi = x[i];
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = orthonormal_with_derivative(rec, order, xi);
      if (dp == 0.0) break;
      const double step = p / dp;
      // Stay inside the gap to the neighbouring eigenvalue estimates.
      const double gap_lo = i > 0 ? 0.5 * (xi - x[i - 1]) : 0.5 * (xi + 1.0);
      const double gap_hi = i + 1 < order ? 0.5 * (x[i + 1] - xi) : 0.5 * (1.0 - xi);
      if (step > gap_lo || -step > gap_hi) break;
      xi -= step;
      if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(xi)) break;
    }
    orthonormal_values(rec, xi, q);
    long double s = 0.0L;
    for (double v : q) s += static_cast<long double>(v) * v;
    rule.nodes[i] = xi;
    rule.weights[i] = static_cast<double>(1.0L / s);
  }
  return rule;
}

QuadratureRule gauss_jacobi_interval(int order, double lo, double hi, double p_lo, double p_hi) {
  if (!(hi > lo)) throw DomainError("gauss_jacobi_interval: empty interval");
  return gauss_rule(JacobiKind{p_hi, p_lo}, order).mapped(lo, hi);
}

QuadratureRule gauss_legendre(int order, double lo, double hi) {
  if (!(hi > lo)) throw DomainError("gauss_legendre: empty interval");
  return gauss_rule(LegendreKind{}, order).mapped(lo, hi);
}

QuadratureRule periodic_trapezoid(int points) {
  if (points < 1) throw DomainError("periodic_trapezoid: points must be positive");
  QuadratureRule rule;
  rule.kind = PeriodicTrapezoidKind{};
  rule.domain = {-std::numbers::pi, std::numbers::pi};
  const double h = 2.0 * std::numbers::pi / points;
  rule.nodes.resize(points);
  rule.weights.assign(points, h);
  for (int k = 0; k < points; ++k) rule.nodes[k] = -std::numbers::pi + (k + 0.5) * h;
  return rule;
}

QuadratureRule composite(std::span<const QuadratureRule> panels) {
  if (panels.empty()) throw DomainError("composite: no panels");
  QuadratureRule out;
  out.kind = CompositeKind{};
  out.domain = {panels.front().domain.lo, panels.back().domain.hi};
  for (const auto& p : panels) {
    out.nodes.insert(out.nodes.end(), p.nodes.begin(), p.nodes.end());
    out.weights.insert(out.weights.end(), p.weights.begin(), p.weights.end());
  }
  return out;
}

double tensor_integrate(const MultiFunction& f, int d, std::span<const QuadratureRule> rules) {
  if (d < 1 || d > 3) throw UnsupportedError("tensor_integrate: dimension must be 1, 2 or 3");
  if (static_cast<int>(rules.size()) != d) throw DomainError("tensor_integrate: need one rule per axis");
  double pt[3] = {0.0, 0.0, 0.0};
  const std::span<const double> point(pt, d);
  long double total = 0.0L;
  const auto& r0 = rules[0];
  for (int i = 0; i < r0.size(); ++i) {
    pt[0] = r0.nodes[i];
    if (d == 1) {
      total += r0.weights[i] * f(point);
      continue;
    }
    const auto& r1 = rules[1];
    long double row = 0.0L;
    for (int j = 0; j < r1.size(); ++j) {
      pt[1] = r1.nodes[j];
      if (d == 2) {
        row += r1.weights[j] * f(point);
        continue;
      }
      const auto& r2 = rules[2];
      long double col = 0.0L;
      for (int k = 0; k < r2.size(); ++k) {
        pt[2] = r2.nodes[k];
        col += r2.weights[k] * f(point);
      }
      row += r1.weights[j] * col;
    }
    total += r0.weights[i] * row;
  }
  return static_cast<double>(total);
}

double periodic_integrate(const MultiFunction& f, int m, int points_per_axis) {
  if (m < 1 || m > 3) throw UnsupportedError("periodic_integrate: dimension must be 1, 2 or 3");
  const QuadratureRule rule = periodic_trapezoid(points_per_axis);
  const std::vector<QuadratureRule> rules(m, rule);
  return tensor_integrate(f, m, rules);
}

CertifiedValue singular_integrate(const SingularIntegrand& s, double tol) {
  if (!(tol >= 1e-12)) throw DomainError("singular_integrate: tol must be >= 1e-12");
  if (!(s.p0 > -1.0) || !(s.p1 > -1.0)) throw DomainError("singular_integrate: endpoint exponents must exceed -1");
  if (!s.smooth) throw DomainError("singular_integrate: missing integrand");
  if (s.interior) {
    const auto [loc, ex] = *s.interior;
    if (!(loc > 0.0 && loc < 1.0)) throw DomainError("singular_integrate: interior singularity must lie in (0,1)");
    if (!(ex > -1.0)) throw DomainError("singular_integrate: interior exponent must exceed -1");
  }

  auto evaluate = [&](int order, double& abs_sum) {
    long double total = 0.0L;
    long double absolute = 0.0L;
    auto add_panel = [&](double lo, double hi, double p_lo, double p_hi, auto&& rest) {
      const QuadratureRule r = gauss_jacobi_interval(order, lo, hi, p_lo, p_hi);
      for (int i = 0; i < r.size(); ++i) {
        const double v = r.weights[i] * rest(r.nodes[i]);
        total += v;
        absolute += std::fabs(v);
      }
    };
    if (s.interior) {
      const auto [loc, ex] = *s.interior;
      add_panel(0.0, loc, s.p0, ex, [&](double y) { return s.smooth(y) * std::pow(1.0 - y, s.p1); });
      add_panel(loc, 1.0, ex, s.p1, [&](double y) { return s.smooth(y) * std::pow(y, s.p0); });
    } else {
      add_panel(0.0, 1.0, s.p0, s.p1, [&](double y) { return s.smooth(y); });
    }
    abs_sum = static_cast<double>(absolute);
    return static_cast<double>(total);
  };

  constexpr int kStartOrder = 16;
  constexpr int kMaxOrder = 1024;
  double abs_sum = 0.0;
  double prev = evaluate(kStartOrder / 2, abs_sum);
  for (int order = kStartOrder; order <= kMaxOrder; order *= 2) {
    const double cur = evaluate(order, abs_sum);
    const double gap = std::fabs(cur - prev);
    if (gap <= tol * std::max(1.0, std::fabs(cur))) {
      const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * abs_sum;
      return {cur, gap + rounding, order};
    }
    prev = cur;
  }
  double dummy = 0.0;
  const double best = evaluate(kMaxOrder, dummy);
  throw EvaluationError("singular_integrate: no convergence within " + std::to_string(kMaxOrder) + " points per panel",
                        best, std::fabs(best - evaluate(kMaxOrder / 2, dummy)));
}

double chebyshev_t(int k, double s) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = s;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_u(int k, double s) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * s;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double principal_value_airfoil(std::span<const double> u_coeffs, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("principal_value_airfoil: x must lie in (0,1)");
  const double s = 2.0 * x - 1.0;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < u_coeffs.size(); ++i) acc += u_coeffs[i] * chebyshev_t(static_cast<int>(i) + 1, s);
  return static_cast<double>(0.5L * std::numbers::pi_v<long double> * acc);
}

std::vector<double> derivative_u_coeffs(std::span<const double> power_coeffs) {
  const int deg = static_cast<int>(power_coeffs.size()) - 1;
  if (deg < 1) return {};
  // h'(y) = sum_k d[k] y^k
  std::vector<double> d(deg);
  for (int k = 0; k < deg; ++k) d[k] = (k + 1) * power_coeffs[k + 1];
  // Horner in the U basis with y = (1+t)/2 and t U_k = (U_{k+1} + U_{k-1})/2.
  std::vector<double> u(1, d[deg - 1]);
  for (int k = deg - 2; k >= 0; --k) {
    std::vector<double> next(u.size() + 1, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      next[i] += 0.5 * u[i];           // the 1/2 part of (1+t)/2
      next[i + 1] += 0.25 * u[i];      // t/2 * U_i -> U_{i+1}/4
      if (i > 0) next[i - 1] += 0.25 * u[i];
    }
    next[0] += d[k];
    u = std::move(next);
  }
  return u;
}

}  // namespace sgas
