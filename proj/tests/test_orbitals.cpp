#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgas/errors.hpp"
#include "sgas/exact.hpp"
#include "sgas/orbitals.hpp"
#include "sgas/quadrature.hpp"
#include "sgas/specfun.hpp"

using namespace sgas;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("kernel examples") {
  const KernelSpec spec{};
  CHECK(apply_kernel(spec, [](double) { return 1.0; }, 0.5, 1e-12).value ==
        doctest::Approx(kPi * std::numbers::sqrt2).epsilon(1e-10));
  const double lambda2 = std::sqrt(2 * kPi) * std::tgamma(2.5) / 2.0;
  CHECK(apply_kernel(spec, [](double y) { return gegenbauer_quarter(2, 2 * y - 1); }, 0.3, 1e-12).value ==
        doctest::Approx(lambda2 * gegenbauer_quarter(2, -0.4)).epsilon(1e-9));
  // the source's endpoint power [t(1-t)]^{-3/8} goes into the weight so the rule absorbs it
  const KernelSpec ps{0.25, -0.375};
  CHECK(apply_kernel(ps, [](double) { return std::cos(kPi / 8) / kPi; }, 0.6, 1e-12).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(apply_kernel(spec, [](double) { return 1.0; }, 1.0, 1e-12), DomainError);
}

TEST_CASE("eigenrelation for low orbitals") {
  const KernelSpec spec{};
  for (int j = 0; j <= 5; ++j) {
    for (double X : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double v =
          apply_kernel(spec, [j](double y) { return gegenbauer_quarter(j, 2 * y - 1); }, X, 1e-11).value;
      const double expected = scaled_occupation(j) * gegenbauer_quarter(j, 2 * X - 1);
      CHECK(std::fabs(v - expected) <= 1e-4 * (1 + std::fabs(expected)));
    }
  }
}

TEST_CASE("Porter–Stirling sources are flattened to one") {
  for (double nu : {0.25, 0.5, 0.75}) {
    for (int i = 1; i <= 10; ++i) {
      const double X = i / 11.0;
      CHECK(std::fabs(porter_stirling_value(nu, X) - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("orbital Gram matrix is the identity") {
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= 8; ++k) {
      const double g = orbital_inner_product(orbital(j, 2.5), orbital(k, 2.5));
      CHECK(std::fabs(g - (j == k ? 1.0 : 0.0)) <= 1e-8);
    }
  }
}

TEST_CASE("orbital sign convention and shape") {
  for (int j = 0; j <= 6; ++j) {
    const Orbital o = orbital(j);
    CHECK(o(0.999) > 0.0);
    // reflection about the box centre
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    CHECK(o(0.2) == doctest::Approx(sign * o(0.8)).epsilon(1e-13));
  }
  CHECK(orbital(0, 4.0)(0.3) == doctest::Approx(orbital(0, 1.0)(0.3) / 2.0));
  CHECK_THROWS_AS(orbital(-1), DomainError);
}

TEST_CASE("scaled occupations") {
  CHECK(scaled_occupation(0) == doctest::Approx(kPi * std::numbers::sqrt2).epsilon(1e-14));
  CHECK(scaled_occupation(1) == doctest::Approx(kPi / std::numbers::sqrt2).epsilon(1e-14));
  for (int j = 0; j < 30; ++j) {
    CHECK(scaled_occupation(j + 1) / scaled_occupation(j) == doctest::Approx((j + 0.5) / (j + 1.0)).epsilon(1e-13));
    CHECK(occupation_number(j, 9) / occupation_number(0, 9) ==
          doctest::Approx(std::exp(log_gamma(j + 0.5) - log_gamma(j + 1.0)) / std::sqrt(kPi)).epsilon(1e-12));
  }
  const auto spec = orbital_spectrum(4, 16);
  REQUIRE(spec.size() == 5);
  CHECK(spec[0].occupation == doctest::Approx(4.0 * barnes_g_three_halves_fourth()));
}

TEST_CASE("expansion identity in projected form") {
  CHECK(verify_expansion_identity(0, 0.5) <= 1e-6);
  CHECK(verify_expansion_identity(3, 0.25) <= 1e-5);
  CHECK(verify_expansion_identity(6, 0.8) <= 1e-5);
}

TEST_CASE("appendix S_j and the L operator") {
  const double z = 0.5;
  CHECK(appendix_s(0, z) == doctest::Approx(std::pow(z, 0.25) * gauss_2f1({0.25, 0.75, 1.25, z})).epsilon(1e-14));
  for (int j = 0; j <= 5; ++j) {
    for (double x : {0.2, 0.5, 0.8}) {
      const double s = appendix_s(j, x);
      CHECK(appendix_l_applied(j, x) == doctest::Approx(-j * (j + 0.5) * s).epsilon(1e-9));
    }
  }
  for (int k = 0; k <= 6; ++k) {
    for (double x : {0.1, 0.4, 0.5, 0.9}) {
      const ContiguityCheck c = contiguity_first(k, x);
      CHECK(std::fabs(c.lhs - c.rhs) <= 1e-10 * std::max(c.scale, 1.0));
    }
  }
}

TEST_CASE("L applied analytically matches finite differences") {
  for (int j = 1; j <= 4; ++j) {
    for (double z : {0.25, 0.6}) {
      const double h = 1e-4;
      const double d1 = (appendix_s(j, z + h) - appendix_s(j, z - h)) / (2 * h);
      const double d2 = (appendix_s(j, z + h) - 2 * appendix_s(j, z) + appendix_s(j, z - h)) / (h * h);
      const double fd = z * (1 - z) * d2 - 0.75 * (2 * z - 1) * d1;
      CHECK(appendix_l_applied(j, z) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("derivative rule matches central differences") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> zd(0.05, 0.9);
  std::uniform_int_distribution<int> kd(0, 6);
  for (int i = 0; i < 20; ++i) {
    const double z = zd(gen);
    const int k = kd(gen);
    auto f = [k](double x) { return std::pow(x, 0.25) * gauss_2f1({0.25 - k, 0.75, 1.25, x}); };
    const double h = 1e-5;
    const double fd = (f(z + h) - f(z - h)) / (2 * h);
    CHECK(appendix_derivative(k, z) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("ground state on the symmetric interval") {
  // int_{-1}^{1} |xi - eta|^{-1/2} (1 - eta^2)^{-1/4} d eta, split at xi
  for (double xi : {-0.4, 0.0, 0.6}) {
    const QuadratureRule left = gauss_jacobi_interval(60, -1.0, xi, -0.25, -0.5);
    const QuadratureRule right = gauss_jacobi_interval(60, xi, 1.0, -0.5, -0.25);
    const double v = left.integrate([](double e) { return std::pow(1 - e, -0.25); }) +
                     right.integrate([](double e) { return std::pow(1 + e, -0.25); });
    CHECK(v == doctest::Approx(scaled_occupation(0)).epsilon(1e-12));
  }
  CHECK(appendix_omega(0) == doctest::Approx(std::tgamma(0.75) / std::tgamma(1.25) * std::sqrt(kPi)).epsilon(1e-14));
}
