#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sgas/errors.hpp"
#include "sgas/orthopoly.hpp"
#include "sgas/quadrature.hpp"
#include "sgas/specfun.hpp"

using namespace sgas;

TEST_CASE("two-point Gauss–Legendre") {
  const QuadratureRule r = gauss_rule(LegendreKind{}, 2);
  CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Chebyshev weight has mass pi") {
  for (int k : {1, 5, 40}) CHECK(gauss_rule(JacobiKind{-0.5, -0.5}, k).mass() == doctest::Approx(std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("polynomial exactness and mapping") {
  const QuadratureRule r = gauss_legendre(20, 0.0, 1.0);
  CHECK(r.integrate([](double x) { return std::pow(x, 5); }) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const QuadratureRule j = gauss_jacobi_interval(1, 0.0, 1.0, 0.5, 0.5);
  CHECK(j.mass() == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-14));
  // degree 2k-1 exactness against x^a (1-x)^b
  const QuadratureRule k = gauss_jacobi_interval(6, 0.0, 1.0, 0.3, -0.4);
  for (int p = 0; p <= 11; ++p) {
    const double exact = std::exp(log_beta(1.3 + p, 0.6));
    CHECK(k.integrate([p](double x) { return std::pow(x, p); }) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("rule invariants: sorted interior nodes, positive weights, correct mass") {
  for (auto kind : {RuleKind{LegendreKind{}}, RuleKind{JacobiKind{0.5, -0.75}}, RuleKind{JacobiKind{3.0, 3.0}}}) {
    for (int order : {3, 17, 64, 200}) {
      const QuadratureRule r = gauss_rule(kind, order);
      for (int i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(r.nodes[i] > -1.0);
        CHECK(r.nodes[i] < 1.0);
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
      }
      const auto* jk = std::get_if<JacobiKind>(&kind);
      const double a = jk ? jk->alpha : 0.0;
      const double b = jk ? jk->beta : 0.0;
      const double mass = std::exp((a + b + 1) * std::log(2.0) + log_beta(a + 1, b + 1));
      CHECK(r.mass() == doctest::Approx(mass).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(gauss_rule(JacobiKind{-1.0, 0.0}, 4), DomainError);
  CHECK_THROWS_AS(gauss_rule(LegendreKind{}, 0), DomainError);
}

TEST_CASE("Gauss rules integrate their orthogonal polynomials to zero") {
  const double a = 0.5, b = -0.5;
  const int order = 12;
  const QuadratureRule r = gauss_rule(JacobiKind{a, b}, order);
  const Recurrence rec = jacobi_recurrence(a, b, order + 1);
  std::vector<double> q(order + 1);
  double worst = 0.0;
  for (int k = 1; k <= order; ++k) {
    const double v = r.integrate([&](double x) {
      orthonormal_values(rec, x, q);
      return q[k];
    });
    worst = std::max(worst, std::fabs(v));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("tensor integration") {
  const QuadratureRule r = gauss_legendre(4, 0.0, 1.0);
  const std::vector<QuadratureRule> two(2, r), three(3, r);
  CHECK(tensor_integrate([](std::span<const double> x) { return (x[1] - x[0]) * (x[1] - x[0]); }, 2, two) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(tensor_integrate([](std::span<const double>) { return 1.0; }, 3, three) == doctest::Approx(1.0));
  const std::vector<QuadratureRule> one{gauss_jacobi_interval(3, 0.0, 1.0, 0.5, 0.5)};
  CHECK(tensor_integrate([](std::span<const double>) { return 1.0; }, 1, one) ==
        doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-14));
  const std::vector<QuadratureRule> four(4, r);
  CHECK_THROWS_AS(tensor_integrate([](std::span<const double>) { return 1.0; }, 4, four), UnsupportedError);
}

TEST_CASE("periodic integration") {
  const double tp = 2.0 * std::numbers::pi;
  CHECK(periodic_integrate([&](std::span<const double>) { return 1.0 / (tp * tp); }, 2, 8) == doctest::Approx(1.0));
  CHECK(periodic_integrate([&](std::span<const double> t) { return (2.0 + 2.0 * std::cos(t[0])) / tp; }, 1, 8) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(periodic_integrate([&](std::span<const double> t) { return (2.0 - 2.0 * std::cos(t[1] - t[0])) / (tp * tp); },
                           2, 8) == doctest::Approx(2.0).epsilon(1e-14));
  // trigonometric polynomials of degree < points/2 are exact
  const double v = periodic_integrate(
      [](std::span<const double> t) { return std::cos(3 * t[0]) * std::sin(2 * t[1]) + std::cos(7 * t[2]) + 0.5; }, 3,
      16);
  CHECK(std::fabs(v - 0.5 * tp * tp * tp) <= 1e-13 * tp * tp * tp);
}

TEST_CASE("singular integrals") {
  SingularIntegrand s{[](double) { return 1.0; }, InteriorSingularity{0.3, -0.5}, 0.0, 0.0};
  const CertifiedValue v = singular_integrate(s, 1e-12);
  CHECK(v.value == doctest::Approx(2.0 * (std::sqrt(0.3) + std::sqrt(0.7))).epsilon(1e-13));

  for (double x : {0.2, 0.5, 0.8}) {
    SingularIntegrand ps{[](double) { return std::cos(std::numbers::pi / 4) / std::numbers::pi; },
                         InteriorSingularity{x, -0.5}, -0.25, -0.25};
    CHECK(singular_integrate(ps, 1e-12).value == doctest::Approx(1.0).epsilon(1e-12));
  }
  SingularIntegrand g{[](double) { return 1.0; }, InteriorSingularity{0.5, -0.5}, -0.25, -0.25};
  CHECK(singular_integrate(g, 1e-12).value == doctest::Approx(std::numbers::pi * std::numbers::sqrt2).epsilon(1e-12));
  CHECK_THROWS_AS(singular_integrate(g, 1e-14), DomainError);
}

TEST_CASE("order doubling stays inside the reported error") {
  const std::vector<SingularIntegrand> cases{
      {[](double y) { return std::exp(y); }, InteriorSingularity{0.37, -0.5}, -0.25, -0.25},
      {[](double y) { return std::cos(3 * y); }, InteriorSingularity{0.8, -0.75}, 0.5, -0.375},
      {[](double y) { return 1.0 / (1.5 + y); }, std::nullopt, -0.5, 0.0},
  };
  for (const auto& s : cases) {
    const CertifiedValue v = singular_integrate(s, 1e-12);
    // re-evaluate at twice the accepted order with a looser tolerance target
    double total = 0.0;
    const double loc = s.interior ? s.interior->location : 1.0;
    const double ex = s.interior ? s.interior->exponent : s.p1;
    const QuadratureRule left = gauss_jacobi_interval(2 * v.order, 0.0, loc, s.p0, ex);
    total += left.integrate([&](double y) { return s.smooth(y) * (s.interior ? std::pow(1.0 - y, s.p1) : 1.0); });
    if (s.interior) {
      const QuadratureRule right = gauss_jacobi_interval(2 * v.order, loc, 1.0, ex, s.p1);
      total += right.integrate([&](double y) { return s.smooth(y) * std::pow(y, s.p0); });
    }
    CHECK(std::fabs(total - v.value) <= v.error + 64 * 2.2e-16 * std::fabs(total));
  }
}

TEST_CASE("principal value airfoil integrals") {
  CHECK(principal_value_airfoil(std::vector<double>{}, 0.3) == 0.0);
  const std::vector<double> one{1.0};
  for (double x : {0.1, 0.4, 0.75}) {
    CHECK(principal_value_airfoil(one, x) == doctest::Approx(std::numbers::pi * (x - 0.5)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(principal_value_airfoil(one, 1.0), DomainError);
}

namespace {

// Symmetric excision: int_{|y-x|>eps} with the singular part subtracted
// analytically, so the limit eps -> 0 is the principal value.
double pv_bruteforce(const std::function<double(double)>& hp, double x) {
  auto g = [&](double y) { return hp(y) * std::sqrt(y * (1.0 - y)); };
  const double gx = g(x);
  const QuadratureRule l = gauss_legendre(400, 0.0, x);
  const QuadratureRule r = gauss_legendre(400, x, 1.0);
  auto smooth = [&](double y) { return (g(y) - gx) / (x - y); };
  // PV int_0^1 dy/(x-y) = ln(x/(1-x))
  return l.integrate(smooth) + r.integrate(smooth) + gx * std::log(x / (1.0 - x));
}

}  // namespace

TEST_CASE("principal value matches excision for h(y) = y^2 and a cubic") {
  const std::vector<double> h2{0.0, 0.0, 1.0};
  const std::vector<double> u2 = derivative_u_coeffs(h2);
  const std::vector<double> h3{0.3, -1.0, 0.5, 2.0};
  const std::vector<double> u3 = derivative_u_coeffs(h3);
  for (double x : {0.2, 0.5, 0.7}) {
    CHECK(principal_value_airfoil(u2, x) == doctest::Approx(pv_bruteforce([](double y) { return 2 * y; }, x)).epsilon(1e-8));
    CHECK(principal_value_airfoil(u3, x) ==
          doctest::Approx(pv_bruteforce([](double y) { return -1.0 + y + 6.0 * y * y; }, x)).epsilon(1e-8));
  }
}

TEST_CASE("derivative_u_coeffs reproduces h'") {
  const std::vector<double> h{1.0, 2.0, -3.0, 0.5, 0.25};
  const std::vector<double> u = derivative_u_coeffs(h);
  for (double y : {0.0, 0.3, 0.9}) {
    double hp = 0.0;
    for (std::size_t k = 1; k < h.size(); ++k) hp += k * h[k] * std::pow(y, k - 1.0);
    double v = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) v += u[i] * chebyshev_u(static_cast<int>(i), 2 * y - 1);
    CHECK(v == doctest::Approx(hp).epsilon(1e-13));
  }
}
