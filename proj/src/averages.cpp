#include "sgas/averages.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgas/errors.hpp"
#include "sgas/linalg.hpp"
#include "sgas/mc_kernels.hpp"
#include "sgas/orthopoly.hpp"

namespace sgas {

double ChargeConfig::total_charge() const {
  double q = 0.0;
  for (const auto& c : charges) q += c.q;
  return q;
}

void ChargeConfig::validate() const {
  for (std::size_t r = 0; r < charges.size(); ++r) {
    const auto& c = charges[r];
    if (!(c.position > 0.0 && c.position < 1.0)) throw DomainError("ChargeConfig: positions must lie in (0,1)");
    if (!(c.q >= 0.0)) throw DomainError("ChargeConfig: charges must be nonnegative");
    for (std::size_t s = 0; s < r; ++s) {
      if (charges[s].position == c.position) throw DomainError("ChargeConfig: positions must be distinct");
    }
  }
}

QuadratureRule charged_weight_rule(double lambda1, double lambda2, const ChargeConfig& charges, int order) {
  charges.validate();
  struct Break {
    double x;
    double power;
  };
  std::vector<Break> cuts{{0.0, lambda1}};
  for (const auto& c : charges.charges) {
    if (c.q > 0.0) cuts.push_back({c.position, 2.0 * c.q});
  }
  cuts.push_back({1.0, lambda2});
  std::sort(cuts.begin() + 1, cuts.end() - 1, [](const Break& a, const Break& b) { return a.x < b.x; });

  std::vector<QuadratureRule> panels;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const Break lo = cuts[p];
    const Break hi = cuts[p + 1];
    QuadratureRule r = gauss_jacobi_interval(order, lo.x, hi.x, lo.power, hi.power);
    for (int i = 0; i < r.size(); ++i) {
      const double x = r.nodes[i];
      double w = r.weights[i];
      if (p != 0) w *= std::pow(x, lambda1);
      if (p + 2 != cuts.size()) w *= std::pow(1.0 - x, lambda2);
      for (std::size_t c = 1; c + 1 < cuts.size(); ++c) {
        if (c != p && c != p + 1) w *= std::pow(std::fabs(cuts[c].x - x), cuts[c].power);
      }
      r.weights[i] = w;
    }
    panels.push_back(std::move(r));
  }
  return composite(panels);
}

LogMagnitude gram_average(const EnsembleParams& params, const QuadratureRule& rule,
                          const std::vector<double>& extra_factor) {
  params.validate();
  if (!extra_factor.empty() && static_cast<int>(extra_factor.size()) != rule.size()) {
    throw DomainError("gram_average: extra_factor must match the rule size");
  }
  const int n = params.n;
  const JacobiBasis basis(params.lambda1, params.lambda2, n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> q(n);
  for (int i = 0; i < rule.size(); ++i) {
    basis.evaluate(rule.nodes[i], q);
    const double w = rule.weights[i] * (extra_factor.empty() ? 1.0 : extra_factor[i]);
    for (int j = 0; j < n; ++j) {
      const double wj = w * q[j];
      for (int k = 0; k <= j; ++k) g(j, k) += wj * q[k];
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) g(j, k) = g(k, j);
  }
  const DeterminantValue d = log_determinant(g);
  if (d.sign == 0) return LogMagnitude::zero();
  return LogMagnitude::from_log(d.log_abs, d.sign);
}

double average_product_bruteforce(const EnsembleParams& params, const ChargeConfig& charges,
                                  const InsertionMode& mode) {
  params.validate();
  if (params.n > 3) throw UnsupportedError("average_product_bruteforce: n must be at most 3");
  constexpr int kOrder = 40;
  QuadratureRule rule;
  if (std::holds_alternative<AbsolutePower>(mode)) {
    rule = charged_weight_rule(params.lambda1, params.lambda2, charges, kOrder);
  } else {
    const int m = std::get<SignedPower>(mode).m;
    if (m < 0) throw DomainError("average_product_bruteforce: power must be nonnegative");
    rule = gauss_jacobi_interval(kOrder, 0.0, 1.0, params.lambda1, params.lambda2);
    for (int i = 0; i < rule.size(); ++i) {
      for (const auto& c : charges.charges) rule.weights[i] *= std::pow(c.position - rule.nodes[i], m);
    }
  }
  const int n = params.n;
  const std::vector<QuadratureRule> rules(n, rule);
  const MultiFunction vandermonde = [n](std::span<const double> x) {
    double v = 1.0;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < k; ++j) v *= (x[k] - x[j]) * (x[k] - x[j]);
    }
    return v;
  };
  const double integral = tensor_integrate(vandermonde, n, rules);
  return integral / std::exp(selberg_closed(params).log_abs);
}

LogMagnitude average_even_power_heine(const EnsembleParams& params, double t, int m) {
  params.validate();
  if (m < 1) throw DomainError("average_even_power_heine: m must be positive");
  const int order = params.n + m / 2 + 2;
  const QuadratureRule rule = gauss_jacobi_interval(order, 0.0, 1.0, params.lambda1, params.lambda2);
  std::vector<double> f(rule.size());
  for (int i = 0; i < rule.size(); ++i) f[i] = std::pow(t - rule.nodes[i], m);
  return gram_average(params, rule, f);
}

LogMagnitude average_charges_heine(const EnsembleParams& params, const ChargeConfig& charges) {
  params.validate();
  const int order = params.n + 32;
  const LogMagnitude coarse =
      gram_average(params, charged_weight_rule(params.lambda1, params.lambda2, charges, order));
  const LogMagnitude fine =
      gram_average(params, charged_weight_rule(params.lambda1, params.lambda2, charges, 2 * order));
  const double gap = std::fabs(fine.log_abs - coarse.log_abs);
  if (fine.sign != coarse.sign || !(gap <= 1e-9 * std::max(1.0, std::fabs(fine.log_abs)))) {
    throw EvaluationError("average_charges_heine: moment quadrature not converged", fine.value(), gap);
  }
  return fine;
}

void DualityCase::validate() const {
  if (n < 1) throw DomainError("DualityCase: n must be positive");
  if (m < 2 || m % 2 != 0) throw DomainError("DualityCase: m must be a positive even integer");
  EnsembleParams p = params;
  p.n = n;
  p.validate();
}

namespace {

EnsembleParams with_n(const EnsembleParams& params, int n) {
  EnsembleParams p = params;
  p.n = n;
  return p;
}

}  // namespace

double duality_lhs(const DualityCase& c) {
  c.validate();
  const EnsembleParams p = with_n(c.params, c.n);
  if (c.n <= 3) return average_product_bruteforce(p, ChargeConfig{{{c.t, 0.0}}}, SignedPower{c.m});
  return average_even_power_heine(p, c.t, c.m).value();
}

std::complex<double> duality_rhs_complex(const DualityCase& c) {
  c.validate();
  if (c.m > 3) throw UnsupportedError("duality_rhs: at most 3 circular variables");
  const EnsembleParams p = with_n(c.params, c.n);
  const double e = 0.5 * (p.lambda1 - p.lambda2 - c.n);
  const double s = p.lambda1 + p.lambda2 + c.n;
  // theta = pi u; the cusp (2 cos(theta/2))^s ~ (1-u^2)^s goes into the weight.
  constexpr int kOrder = 48;
  const QuadratureRule rule = gauss_rule(JacobiKind{s, s}, kOrder);
  const int q = rule.size();
  std::vector<std::complex<double>> factor(q);
  std::vector<std::complex<double>> z(q);
  for (int i = 0; i < q; ++i) {
    const double u = rule.nodes[i];
    const double theta = std::numbers::pi * u;
    z[i] = std::polar(1.0, theta);
    const double smooth = std::pow(2.0 * std::cos(0.5 * theta) / ((1.0 - u) * (1.0 + u)), s);
    const std::complex<double> poly = std::pow(c.t * (1.0 + z[i]) - 1.0, c.n);
    factor[i] = rule.weights[i] * std::numbers::pi * std::polar(smooth, e * theta) * poly;
  }

  std::vector<int> idx(c.m, 0);
  std::complex<long double> total = 0.0L;
  for (;;) {
    std::complex<double> term = 1.0;
    for (int a = 0; a < c.m; ++a) term *= factor[idx[a]];
    double vdm = 1.0;
    for (int a = 0; a < c.m; ++a) {
      for (int b = 0; b < a; ++b) vdm *= std::norm(z[idx[a]] - z[idx[b]]);
    }
    total += std::complex<long double>(term.real() * vdm, term.imag() * vdm);
    int a = 0;
    while (a < c.m && ++idx[a] == q) idx[a++] = 0;
    if (a == c.m) break;
  }
  double norm = std::pow(2.0 * std::numbers::pi, -c.m);
  for (int k = 2; k <= c.m; ++k) norm /= k;
  const double a_const = duality_constant_A(p, c.m).value();
  return std::complex<double>(static_cast<double>(total.real()), static_cast<double>(total.imag())) *
         (norm * a_const);
}

double duality_rhs(const DualityCase& c) { return duality_rhs_complex(c).real(); }

double log_charge_prefactor(const EnsembleParams& params, const ChargeConfig& charges) {
  double s = 0.0;
  const auto& cs = charges.charges;
  for (std::size_t r = 0; r < cs.size(); ++r) {
    s += cs[r].q * (params.lambda1 * std::log(cs[r].position) + params.lambda2 * std::log1p(-cs[r].position));
    for (std::size_t k = 0; k < r; ++k) {
      s += 2.0 * cs[r].q * cs[k].q * std::log(std::fabs(cs[r].position - cs[k].position));
    }
  }
  return s;
}

namespace {

double log_selberg_shift(const EnsembleParams& params, double total_charge) {
  return selberg_closed(params).log_abs - selberg_continued(params.n + total_charge, params.lambda1, params.lambda2);
}

}  // namespace

double partition_ratio_bruteforce(const EnsembleParams& params, const ChargeConfig& charges) {
  charges.validate();
  const double avg = average_product_bruteforce(params, charges, AbsolutePower{});
  return avg * std::exp(log_charge_prefactor(params, charges) + log_selberg_shift(params, charges.total_charge()));
}

double partition_ratio_heine(const EnsembleParams& params, const ChargeConfig& charges) {
  charges.validate();
  const LogMagnitude avg = average_charges_heine(params, charges);
  if (avg.sign <= 0) throw EvaluationError("partition_ratio_heine: nonpositive average", avg.value(), 0.0);
  return std::exp(avg.log_abs + log_charge_prefactor(params, charges) +
                  log_selberg_shift(params, charges.total_charge()));
}

namespace {

std::vector<double> run_samples(const DensityMatrixJob& job, int m, int threads, SampleDiagnostics& diag) {
  if (threads <= 1) return density_matrix_samples_serial(job, m, &diag);
  return density_matrix_samples_parallel(job, m, threads, &diag);
}

MCEstimate finish(const std::vector<double>& samples, double prefactor, std::uint64_t seed,
                  const SampleDiagnostics& diag) {
  const SampleSummary s = summarize(samples);
  MCEstimate out;
  out.value = prefactor * s.mean;
  out.std_error = prefactor * s.std_error;
  out.m_samples = static_cast<int>(samples.size());
  out.master_seed = seed;
  out.resamples = diag.resamples;
  out.tuning_warnings = diag.tuning_warnings;
  return out;
}

}  // namespace

MCEstimate mc_density_matrix(const DensityMatrixQuery& query, int m_samples, std::uint64_t master_seed,
                             int threads) {
  query.validate();
  if (m_samples < 100) throw DomainError("mc_density_matrix: at least 100 samples are required");
  const DensityMatrixJob job{query.boundary, query.N, query.X, query.Y, master_seed};
  SampleDiagnostics diag;
  const std::vector<double> samples = run_samples(job, m_samples, threads, diag);
  const double xy = query.X * (1.0 - query.X) * query.Y * (1.0 - query.Y);
  double prefactor = 0.0;
  if (query.boundary == Boundary::Dirichlet) {
    prefactor = 8.0 * query.rho() / (query.N + 1) * std::sqrt(xy);
  } else {
    const double lam = -0.5;
    const double log_ratio = selberg_closed(query.N, lam, lam).log_abs - selberg_closed(query.N + 1, lam, lam).log_abs;
    prefactor = std::numbers::pi * query.rho() * std::exp(log_ratio - query.N * std::log(16.0)) *
                std::pow(xy, 0.25 + 0.5 * lam);
  }
  return finish(samples, prefactor, master_seed, diag);
}

MCEstimate mc_density_matrix_symmetric(int N, double L, double X, int m_samples, std::uint64_t master_seed,
                                       int threads) {
  DensityMatrixQuery q{N, L, X, 1.0 - X, Boundary::Dirichlet};
  q.validate();
  if (m_samples < 100) throw DomainError("mc_density_matrix_symmetric: at least 100 samples are required");
  const DensityMatrixJob job{Boundary::Dirichlet, N, X, 1.0 - X, master_seed};
  SampleDiagnostics diag;
  const std::vector<double> samples = run_samples(job, m_samples, threads, diag);
  return finish(samples, 8.0 * q.rho() / (N + 1) * X * (1.0 - X), master_seed, diag);
}

double density_matrix_exact(const DensityMatrixQuery& query) {
  query.validate();
  if (query.X == query.Y) throw DomainError("density_matrix_exact: X must differ from Y");
  const double lam = query.boundary == Boundary::Dirichlet ? 0.5 : -0.5;
  const EnsembleParams p{query.N, lam, lam, 1.0};
  const ChargeConfig charges{{{query.X, 0.5}, {query.Y, 0.5}}};
  const double z = partition_ratio_heine(p, charges);
  const double xy = query.X * (1.0 - query.X) * query.Y * (1.0 - query.Y);
  return std::numbers::pi * query.rho() / std::sqrt(std::fabs(query.X - query.Y)) * std::pow(xy, 0.25) * z;
}

std::vector<double> table1_positions() {
  std::vector<double> xs;
  for (int k = 0; k < 10; ++k) xs.push_back(0.025 + 0.05 * k);
  return xs;
}

std::vector<Table1Row> density_matrix_table(int N, int m_samples, std::uint64_t seed, int threads,
                                            const std::vector<double>& xs) {
  std::vector<Table1Row> rows;
  for (double X : xs) {
    const DensityMatrixQuery q{N, 1.0, X, 1.0 - X, Boundary::Dirichlet};
    const MCEstimate est = mc_density_matrix_symmetric(N, 1.0, X, m_samples, seed, threads);
    const double asym = density_matrix_asymptote(q);
    rows.push_back({X, est.value, est.std_error, asym, est.value / asym, density_matrix_exact(q) / asym});
  }
  return rows;
}

}  // namespace sgas
