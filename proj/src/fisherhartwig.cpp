#include "sgas/fisherhartwig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "sgas/averages.hpp"
#include "sgas/errors.hpp"
#include "sgas/quadrature.hpp"
#include "sgas/specfun.hpp"

namespace sgas {

double SymbolSpec::h(double x) const {
  double v = 0.0;
  for (auto it = h_coeffs.rbegin(); it != h_coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

double SymbolSpec::g(double theta) const {
  if (g_coeffs.empty()) return 0.0;
  double v = g_coeffs[0];
  for (std::size_t p = 1; p < g_coeffs.size(); ++p) v += 2.0 * g_coeffs[p] * std::cos(p * theta);
  return v;
}

double SymbolSpec::total_charge() const {
  double q = 0.0;
  for (const auto& s : singularities) q += s.strength;
  return q;
}

namespace {

ChargeConfig charges_of(const SymbolSpec& symbol) {
  ChargeConfig c;
  for (const auto& s : symbol.singularities) c.charges.push_back({s.location, s.strength});
  c.validate();
  return c;
}

double log_gram(const EnsembleParams& p, const SymbolSpec& symbol, const ChargeConfig& charges, int order,
                int& sign) {
  const QuadratureRule rule = charged_weight_rule(p.lambda1, p.lambda2, charges, order);
  std::vector<double> f;
  if (!symbol.h_coeffs.empty()) {
    f.resize(rule.size());
    for (int i = 0; i < rule.size(); ++i) f[i] = std::exp(symbol.h(rule.nodes[i]));
  }
  const LogMagnitude g = gram_average(p, rule, f);
  sign = g.sign;
  return g.log_abs;
}

double log_fh_constant(double q) {
  return -q * std::log(std::numbers::pi) + 2.0 * log_barnes_g(q + 1.0) - log_barnes_g(2.0 * q + 1.0);
}

}  // namespace

DeterminantValue hankel_determinant(const EnsembleParams& params, const SymbolSpec& symbol, int n) {
  EnsembleParams p = params;
  p.n = n;
  p.validate();
  const ChargeConfig charges = charges_of(symbol);
  const int order = n + 32 + static_cast<int>(symbol.h_coeffs.size());
  int s1 = 0;
  int s2 = 0;
  const double coarse = log_gram(p, symbol, charges, order, s1);
  const double fine = log_gram(p, symbol, charges, 2 * order, s2);
  const double gap = std::fabs(fine - coarse);
  if (s1 != s2 || !(gap <= 1e-9 * std::max(1.0, std::fabs(fine)))) {
    throw EvaluationError("hankel_determinant: moment quadrature not converged", fine, gap);
  }
  return {selberg_closed(p).log_abs + fine, s2, n};
}

double jacobi_fh_exact_log(const EnsembleParams& params, const SymbolSpec& symbol, int n) {
  const DeterminantValue h = hankel_determinant(params, symbol, n);
  if (h.sign <= 0) throw EvaluationError("jacobi_fh_exact_log: nonpositive Hankel determinant", h.value(), 0.0);
  double pre = 0.0;
  for (const auto& s : symbol.singularities) {
    pre += s.strength * (params.lambda1 * std::log(s.location) + params.lambda2 * std::log1p(-s.location));
  }
  return pre + h.log_abs - selberg_continued(n + symbol.total_charge(), params.lambda1, params.lambda2);
}

double jacobi_fh_asymptote(const EnsembleParams& params, const SymbolSpec& symbol, int n) {
  if (n < 1) throw DomainError("jacobi_fh_asymptote: n must be positive");
  const double l12 = params.lambda1 + params.lambda2;
  const double Q = symbol.total_charge();
  double out = 0.0;

  if (!symbol.h_coeffs.empty()) {
    const int deg = static_cast<int>(symbol.h_coeffs.size()) - 1;
    const QuadratureRule cheb = gauss_jacobi_interval(deg + 2, 0.0, 1.0, -0.5, -0.5);
    const double mean_h = cheb.integrate([&](double x) { return symbol.h(x); });
    out += (n + Q + 0.5 * l12) / std::numbers::pi * mean_h;
    out += -0.25 * l12 * (symbol.h(0.0) + symbol.h(1.0));
    const std::vector<double> u = derivative_u_coeffs(symbol.h_coeffs);
    if (!u.empty()) {
      const double pv = cheb.integrate([&](double x) { return symbol.h(x) * principal_value_airfoil(u, x); });
      out += pv / (4.0 * std::numbers::pi * std::numbers::pi);
    }
  }

  const auto& s = symbol.singularities;
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double q = s[r].strength;
    const double y = s[r].location;
    if (!(y > 0.0 && y < 1.0)) throw DomainError("jacobi_fh_asymptote: singularities must lie in (0,1)");
    out += (q * q - q) * std::log(2.0 * n);
    out += -q * symbol.h(y) - 0.5 * q * q * std::log(y * (1.0 - y)) + log_fh_constant(q);
    for (std::size_t k = 0; k < r; ++k) out += -2.0 * q * s[k].strength * std::log(std::fabs(y - s[k].location));
  }
  return out;
}

namespace {

// |e^{iθ} - e^{iφ}| = |2 sin((θ - φ)/2)|
double chord(double theta, double phi) { return std::fabs(2.0 * std::sin(0.5 * (theta - phi))); }

struct CircleRule {
  std::vector<double> nodes;
  std::vector<double> weights;  ///< carry the whole symbol
};

CircleRule symbol_rule(const SymbolSpec& symbol, int order) {
  CircleRule out;
  std::vector<Singularity> sing;
  for (const auto& s : symbol.singularities) {
    if (s.strength > 0.0) sing.push_back(s);
  }
  if (sing.empty()) {
    const QuadratureRule r = periodic_trapezoid(2 * order);
    for (int i = 0; i < r.size(); ++i) {
      out.nodes.push_back(r.nodes[i]);
      out.weights.push_back(r.weights[i] * std::exp(symbol.g(r.nodes[i])));
    }
    return out;
  }
  std::sort(sing.begin(), sing.end(), [](const Singularity& a, const Singularity& b) { return a.location < b.location; });
  const std::size_t R = sing.size();
  for (std::size_t r = 0; r < R; ++r) {
    const double lo = sing[r].location;
    const double hi = r + 1 < R ? sing[r + 1].location : sing[0].location + 2.0 * std::numbers::pi;
    const double p_lo = 2.0 * sing[r].strength;
    const double p_hi = 2.0 * sing[(r + 1) % R].strength;
    const QuadratureRule rule = gauss_jacobi_interval(order, lo, hi, p_lo, p_hi);
    for (int i = 0; i < rule.size(); ++i) {
      const double th = rule.nodes[i];
      double w = rule.weights[i] * std::exp(symbol.g(th)) / (std::pow(th - lo, p_lo) * std::pow(hi - th, p_hi));
      for (const auto& sk : sing) w *= std::pow(chord(th, sk.location), 2.0 * sk.strength);
      out.nodes.push_back(th);
      out.weights.push_back(w);
    }
  }
  return out;
}

DeterminantValue toeplitz_at_order(const SymbolSpec& symbol, int N, int order) {
  const CircleRule rule = symbol_rule(symbol, order);
  std::vector<std::complex<double>> c(N);
  for (int p = 0; p < N; ++p) {
    std::complex<long double> s = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double th = rule.nodes[i];
      s += std::complex<long double>(rule.weights[i] * std::cos(p * th), -rule.weights[i] * std::sin(p * th));
    }
    c[p] = std::complex<double>(static_cast<double>(s.real()), static_cast<double>(s.imag())) /
           (2.0 * std::numbers::pi);
  }
  Eigen::MatrixXcd t(N, N);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) t(j, k) = j >= k ? c[j - k] : std::conj(c[k - j]);
  }
  return log_determinant_hermitian(t);
}

}  // namespace

DeterminantValue toeplitz_determinant(const SymbolSpec& symbol, int N) {
  if (N < 1) throw DomainError("toeplitz_determinant: N must be positive");
  for (const auto& s : symbol.singularities) {
    if (!(s.strength >= 0.0)) throw DomainError("toeplitz_determinant: strengths must be nonnegative");
    if (!(s.location > -std::numbers::pi && s.location <= std::numbers::pi)) {
      throw DomainError("toeplitz_determinant: locations must lie in (-pi, pi]");
    }
  }
  const int order = N + 48 + 4 * static_cast<int>(symbol.g_coeffs.size());
  const DeterminantValue coarse = toeplitz_at_order(symbol, N, order);
  const DeterminantValue fine = toeplitz_at_order(symbol, N, 2 * order);
  const double gap = std::fabs(fine.log_abs - coarse.log_abs);
  if (coarse.sign != fine.sign || !(gap <= 1e-9 * std::max(1.0, std::fabs(fine.log_abs)))) {
    throw EvaluationError("toeplitz_determinant: Fourier coefficients not converged", fine.log_abs, gap);
  }
  return fine;
}

double toeplitz_fh_asymptote(const SymbolSpec& symbol, int N) {
  if (N < 1) throw DomainError("toeplitz_fh_asymptote: N must be positive");
  const double g0 = symbol.g_coeffs.empty() ? 0.0 : symbol.g_coeffs[0];
  double out = N * g0;
  for (std::size_t k = 1; k < symbol.g_coeffs.size(); ++k) out += k * symbol.g_coeffs[k] * symbol.g_coeffs[k];
  const auto& s = symbol.singularities;
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double a = s[r].strength;
    out += a * a * std::log(static_cast<double>(N));
    out += -a * (symbol.g(s[r].location) - g0);
    out += 2.0 * log_barnes_g(1.0 + a) - log_barnes_g(1.0 + 2.0 * a);
    for (std::size_t k = 0; k < r; ++k) out += -2.0 * a * s[k].strength * std::log(chord(s[r].location, s[k].location));
  }
  return out;
}

DriftReport fh_drift_report(const std::vector<std::pair<int, double>>& exact_logs,
                            const std::vector<double>& predicted_logs) {
  if (exact_logs.size() != predicted_logs.size()) throw DomainError("fh_drift_report: series lengths differ");
  if (exact_logs.size() < 4) throw DomainError("fh_drift_report: at least four sizes are required");
  DriftReport rep;
  for (std::size_t i = 0; i < exact_logs.size(); ++i) {
    rep.rows.push_back({exact_logs[i].first, exact_logs[i].second, predicted_logs[i],
                        exact_logs[i].second - predicted_logs[i]});
  }
  auto decreasing_from = [&](std::size_t start) {
    for (std::size_t i = start + 1; i < rep.rows.size(); ++i) {
      if (!(std::fabs(rep.rows[i].delta) < std::fabs(rep.rows[i - 1].delta))) return false;
    }
    return true;
  };
  rep.decreasing_last3 = decreasing_from(rep.rows.size() - 3);
  rep.decreasing_all = decreasing_from(0);
  rep.final_abs = std::fabs(rep.rows.back().delta);
  return rep;
}

}  // namespace sgas
