#include "sgas/orbitals.hpp"

#include <cmath>
#include <numbers>

#include "sgas/errors.hpp"
#include "sgas/exact.hpp"
#include "sgas/specfun.hpp"

namespace sgas {

CertifiedValue apply_kernel(const KernelSpec& spec, const std::function<double(double)>& f, double X, double tol) {
  if (!(spec.nu > 0.0 && spec.nu < 1.0)) throw DomainError("apply_kernel: nu must lie in (0,1)");
  if (!(X > 0.0 && X < 1.0)) throw DomainError("apply_kernel: X must lie in (0,1)");
  SingularIntegrand s;
  s.smooth = f;
  s.interior = InteriorSingularity{X, -spec.nu};
  s.p0 = spec.weight_exponent;
  s.p1 = spec.weight_exponent;
  return singular_integrate(s, tol);
}

double Orbital::operator()(double X) const {
  if (!(X >= 0.0 && X <= 1.0)) throw DomainError("Orbital: X must lie in [0,1]");
  return normalization * std::pow(X * (1.0 - X), 0.125) * gegenbauer_quarter(j, 2.0 * X - 1.0);
}

Orbital orbital(int j, double L) {
  if (j < 0) throw DomainError("orbital: j must be nonnegative");
  if (!(L > 0.0)) throw DomainError("orbital: L must be positive");
  const double g = log_gamma(0.25);
  const double log_sq = log_gamma(j + 1.0) + std::log(j + 0.25) + 2.0 * g - log_gamma(j + 0.5);
  return Orbital{j, L, std::exp(0.5 * log_sq) / std::sqrt(L)};
}

double orbital_inner_product(const Orbital& a, const Orbital& b) {
  if (a.L != b.L) throw DomainError("orbital_inner_product: orbitals live on different boxes");
  const int order = (a.j + b.j) / 2 + 2;
  const QuadratureRule rule = gauss_jacobi_interval(order, 0.0, 1.0, -0.25, -0.25);
  const double s = rule.integrate([&](double x) {
    return gegenbauer_quarter(a.j, 2.0 * x - 1.0) * gegenbauer_quarter(b.j, 2.0 * x - 1.0);
  });
  return a.L / std::numbers::pi * a.normalization * b.normalization * s;
}

double scaled_occupation(int j) {
  if (j < 0) throw DomainError("scaled_occupation: j must be nonnegative");
  return std::sqrt(2.0 * std::numbers::pi) * std::exp(log_gamma(j + 0.5) - log_gamma(j + 1.0));
}

std::vector<OrbitalSpectrumEntry> orbital_spectrum(int j_max, int N, double L) {
  if (j_max < 0) throw DomainError("orbital_spectrum: j_max must be nonnegative");
  std::vector<OrbitalSpectrumEntry> out;
  for (int j = 0; j <= j_max; ++j) {
    out.push_back({j, occupation_number(j, N), scaled_occupation(j), orbital(j, L).normalization});
  }
  return out;
}

double verify_expansion_identity(int j_max, double X) {
  if (j_max < 0) throw DomainError("verify_expansion_identity: j_max must be nonnegative");
  const KernelSpec spec{0.5, -0.25};
  const double g2 = std::exp(2.0 * log_gamma(0.25));
  double worst = 0.0;
  for (int k = 0; k <= j_max; ++k) {
    const double left =
        apply_kernel(spec, [k](double y) { return gegenbauer_quarter(k, 2.0 * y - 1.0); }, X, 1e-12).value;
    // Only the j = k term of the series survives the projection.
    const double h_k = std::numbers::pi * std::exp(log_gamma(k + 0.5) - log_gamma(k + 1.0)) / ((k + 0.25) * g2);
    const double right =
        std::sqrt(2.0 / std::numbers::pi) * g2 * (k + 0.25) * gegenbauer_quarter(k, 2.0 * X - 1.0) * h_k;
    worst = std::max(worst, std::fabs(left - right) / std::max(1.0, std::fabs(right)));
  }
  return worst;
}

double porter_stirling_value(double nu, double X) {
  const double c = std::cos(0.5 * std::numbers::pi * nu) / std::numbers::pi;
  return apply_kernel(KernelSpec{nu, 0.5 * (nu - 1.0)}, [c](double) { return c; }, X, 1e-12).value;
}

double appendix_omega(int j) {
  if (j < 0) throw DomainError("appendix_omega: j must be nonnegative");
  return std::exp(log_gamma(0.75) - log_gamma(1.25) + log_gamma(j + 0.5) - log_gamma(j + 1.0));
}

namespace {

double coefficient(int j, int k) {
  return pochhammer(-j, k) * pochhammer(j + 0.5, k) / (pochhammer(1.0, k) * pochhammer(0.75, k));
}

double f2(double a, double c, double z) { return gauss_2f1({a, 0.75, c, z}); }

void check_z(double z) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("appendix: z must lie in (0,1)");
}

}  // namespace

double appendix_s(int j, double z) {
  if (j < 0) throw DomainError("appendix_s: j must be nonnegative");
  check_z(z);
  long double s = 0.0L;
  for (int k = 0; k <= j; ++k) s += coefficient(j, k) * f2(0.25 - k, 1.25, z);
  return static_cast<double>(std::pow(z, 0.25) * s);
}

double appendix_l_applied(int j, double z) {
  if (j < 0) throw DomainError("appendix_l_applied: j must be nonnegative");
  check_z(z);
  long double s = 0.0L;
  for (int k = 0; k <= j; ++k) {
    const double a = 0.25 - k;
    s += coefficient(j, k) * ((1.0 - z) * f2(a, -0.75, z) + (2.0 * z - 1.0) * f2(a, 0.25, z));
  }
  return static_cast<double>(-3.0 / 16.0 * std::pow(z, 0.25) / z * s);
}

double appendix_derivative(int k, double z) {
  check_z(z);
  return 0.25 * std::pow(z, -0.75) * f2(0.25 - k, 0.25, z);
}

ContiguityCheck contiguity_first(int k, double z) {
  check_z(z);
  const double a = 0.25 - k;
  const double lhs = -3.0 / 16.0 * (1.0 - z) * f2(a, -0.75, z);
  const double t1 = ((6.0 - 4.0 * k) * z - 3.0) / 16.0 * f2(a, 0.25, z);
  const double t2 = -0.5 * k * z * f2(a, 1.25, z);
  return {lhs, t1 + t2, std::fabs(lhs) + std::fabs(t1) + std::fabs(t2)};
}

ContiguityCheck contiguity_second(int k, double z) {
  check_z(z);
  const double a = 0.25 - k;
  const double lhs = -0.25 * f2(a, 0.25, z);
  const double t1 = -k * f2(a, 1.25, z);
  const double t2 = -a * f2(a + 1.0, 1.25, z);
  return {lhs, t1 + t2, std::fabs(lhs) + std::fabs(t1) + std::fabs(t2)};
}

}  // namespace sgas
