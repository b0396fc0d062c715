#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sgas/averages.hpp"
#include "sgas/errors.hpp"
#include "sgas/exact.hpp"
#include "sgas/linalg.hpp"
#include "sgas/mc_kernels.hpp"
#include "sgas/quadrature.hpp"

using namespace sgas;

namespace {

// <prod (t - x_l)^m> as a ratio of monomial Hankel determinants, moments from
// a plain Gauss–Jacobi rule. Independent of the orthonormal-basis route and
// only well conditioned for small n.
double monomial_hankel_average(const EnsembleParams& p, double t, int m) {
  const QuadratureRule r = gauss_jacobi_interval(60, 0.0, 1.0, p.lambda1, p.lambda2);
  Eigen::MatrixXd a(p.n, p.n), b(p.n, p.n);
  for (int j = 0; j < p.n; ++j) {
    for (int k = 0; k < p.n; ++k) {
      a(j, k) = r.integrate([&](double x) { return std::pow(x, j + k) * std::pow(t - x, m); });
      b(j, k) = r.integrate([&](double x) { return std::pow(x, j + k); });
    }
  }
  const DeterminantValue da = log_determinant(a), db = log_determinant(b);
  return da.sign * db.sign * std::exp(da.log_abs - db.log_abs);
}

}  // namespace

TEST_CASE("brute-force averages at n = 1") {
  const EnsembleParams p{1, 0.0, 0.0, 1.0};
  CHECK(average_product_bruteforce(p, ChargeConfig{{{0.999999999, 0.0}}}, SignedPower{1}) ==
        doctest::Approx(0.5).epsilon(1e-8));
  CHECK(average_product_bruteforce(p, ChargeConfig{{{0.5, 0.5}}}, AbsolutePower{}) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(average_product_bruteforce(EnsembleParams{4, 0, 0, 1}, ChargeConfig{{{0.5, 0.5}}}, AbsolutePower{}),
                  UnsupportedError);
}

TEST_CASE("Heine and brute-force routes agree for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (auto [l1, l2] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {-0.5, -0.5}, {0.0, 1.5}}) {
      const EnsembleParams p{n, l1, l2, 1.0};
      for (double t : {0.3, 0.7}) {
        const double brute = average_product_bruteforce(p, ChargeConfig{{{t, 0.0}}}, SignedPower{2});
        CHECK(average_even_power_heine(p, t, 2).value() == doctest::Approx(brute).epsilon(1e-9));
      }
      const ChargeConfig one{{{0.3, 0.5}}};
      CHECK(average_charges_heine(p, one).value() ==
            doctest::Approx(average_product_bruteforce(p, one, AbsolutePower{})).epsilon(1e-9));
      const ChargeConfig two{{{0.3, 0.5}, {0.7, 1.0}}};
      CHECK(average_charges_heine(p, two).value() ==
            doctest::Approx(average_product_bruteforce(p, two, AbsolutePower{})).epsilon(1e-9));
    }
  }
}

TEST_CASE("Heine route matches monomial Hankel determinants for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const EnsembleParams p{n, 0.5, -0.25, 1.0};
    for (int m : {1, 2, 4}) {
      CHECK(average_even_power_heine(p, 0.6, m).value() ==
            doctest::Approx(monomial_hankel_average(p, 0.6, m)).epsilon(1e-8));
    }
  }
}

TEST_CASE("duality identity in four cases") {
  for (auto [l1, l2] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {-0.5, -0.5}}) {
    for (double t : {0.3, 0.7}) {
      const DualityCase c{2, 2, t, EnsembleParams{2, l1, l2, 1.0}};
      const double lhs = duality_lhs(c);
      const std::complex<double> rhs = duality_rhs_complex(c);
      CHECK(std::fabs(lhs - rhs.real()) <= 1e-6 * std::fabs(lhs));
      CHECK(std::fabs(rhs.imag()) <= 1e-10 * std::fabs(rhs.real()));
    }
  }
  CHECK_THROWS_AS(duality_rhs(DualityCase{2, 4, 0.5, EnsembleParams{2, 0.5, 0.5, 1.0}}), UnsupportedError);
}

TEST_CASE("duality holds beyond the brute-force range on the left") {
  const DualityCase c{5, 2, 0.4, EnsembleParams{5, 0.5, 0.5, 1.0}};
  CHECK(duality_lhs(c) == doctest::Approx(duality_rhs(c)).epsilon(1e-6));
}

TEST_CASE("partition ratios") {
  const EnsembleParams p{2, 0.5, 0.5, 1.0};
  const ChargeConfig single{{{0.3, 1.0}}};
  const double brute = partition_ratio_bruteforce(p, single);
  CHECK(partition_ratio_heine(p, single) == doctest::Approx(brute).epsilon(1e-9));
  // q = 1 is the (n+1)-point density with the Jacobi prefactor, normalised per particle
  const double by_even_power = std::exp(0.5 * std::log(0.3) + 0.5 * std::log(0.7) +
                                        average_even_power_heine(p, 0.3, 2).log_abs +
                                        selberg_closed(2, 0.5, 0.5).log_abs - selberg_closed(3, 0.5, 0.5).log_abs);
  CHECK(brute == doctest::Approx(by_even_power).epsilon(1e-9));

  const ChargeConfig degenerate{{{0.3, 1.0}, {0.7, 0.0}}};
  CHECK(partition_ratio_bruteforce(p, degenerate) == doctest::Approx(brute).epsilon(1e-12));

  const EnsembleParams p3{3, 0.5, 0.5, 1.0};
  const double anchor = partition_ratio_bruteforce(p3, ChargeConfig{{{0.3, 0.5}, {0.7, 0.5}}});
  CHECK(std::isfinite(anchor));
  CHECK(anchor > 0.0);
  CHECK(partition_ratio_heine(p3, ChargeConfig{{{0.3, 0.5}, {0.7, 0.5}}}) == doctest::Approx(anchor).epsilon(1e-9));
}

TEST_CASE("factorization ratio moves toward one") {
  double previous = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 3; ++n) {
    const EnsembleParams p{n, 0.5, 0.5, 1.0};
    const double both = partition_ratio_bruteforce(p, ChargeConfig{{{0.3, 0.5}, {0.7, 0.5}}});
    const double a = partition_ratio_bruteforce(p, ChargeConfig{{{0.3, 0.5}}});
    const double b = partition_ratio_bruteforce(p, ChargeConfig{{{0.7, 0.5}}});
    const double gap = std::fabs(both / (a * b) - 1.0);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("charge validation") {
  CHECK_THROWS_AS((ChargeConfig{{{0.0, 1.0}}}.validate()), DomainError);
  CHECK_THROWS_AS((ChargeConfig{{{0.4, 1.0}, {0.4, 0.5}}}.validate()), DomainError);
  CHECK_THROWS_AS((ChargeConfig{{{0.4, -1.0}}}.validate()), DomainError);
}

TEST_CASE("Monte Carlo density matrix at N = 2 agrees with the exact value") {
  for (Boundary b : {Boundary::Dirichlet, Boundary::Neumann}) {
    const DensityMatrixQuery q{2, 1.0, 0.3, 0.6, b};
    const MCEstimate est = mc_density_matrix(q, 20000, 17, 1);
    const double exact = density_matrix_exact(q);
    CHECK(std::fabs(est.value - exact) <= 3 * est.std_error);
    CHECK(est.m_samples == 20000);
    CHECK(est.master_seed == 17);
  }
  CHECK_THROWS_AS(mc_density_matrix(DensityMatrixQuery{2, 1.0, 0.3, 0.6}, 99, 1, 1), DomainError);
}

TEST_CASE("general and symmetric estimators agree at Y = 1 - X") {
  for (double X : {0.025, 0.2, 0.475}) {
    const DensityMatrixQuery q{14, 1.0, X, 1.0 - X, Boundary::Dirichlet};
    const MCEstimate general = mc_density_matrix(q, 200, 42, 1);
    const MCEstimate symmetric = mc_density_matrix_symmetric(14, 1.0, X, 200, 42, 1);
    CHECK(general.value == doctest::Approx(symmetric.value).epsilon(1e-14));
    CHECK(general.std_error == doctest::Approx(symmetric.std_error).epsilon(1e-14));
  }
}

TEST_CASE("per-sample products are thread-count independent") {
  const DensityMatrixJob job{Boundary::Dirichlet, 14, 0.225, 0.775, 42};
  const std::vector<double> serial = density_matrix_samples_serial(job, 300);
  for (int threads : {1, 2, 4}) CHECK(density_matrix_samples_parallel(job, 300, threads) == serial);
  const MCEstimate a = mc_density_matrix(DensityMatrixQuery{14, 1.0, 0.225, 0.775}, 300, 42, 1);
  const MCEstimate b = mc_density_matrix(DensityMatrixQuery{14, 1.0, 0.225, 0.775}, 300, 42, 4);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("log-space products survive N = 100") {
  const MCEstimate est = mc_density_matrix(DensityMatrixQuery{100, 1.0, 0.49, 0.51}, 100, 3, 1);
  CHECK(std::isfinite(est.value));
  CHECK(est.value > 0.0);
  CHECK(std::isfinite(est.std_error));
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000);
  for (int i = 0; i < 1000; ++i) v[i] = 1.0 / (i + 1);
  double naive = 0.0;
  for (double x : v) naive += x;
  CHECK(pairwise_sum(v) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
  const SampleSummary s = summarize(std::vector<double>{1.0, 2.0, 3.0, 4.0});
  CHECK(s.mean == 2.5);
  CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("table layout") {
  const std::vector<double> xs = table1_positions();
  REQUIRE(xs.size() == 10);
  CHECK(xs.front() == doctest::Approx(0.025));
  CHECK(xs.back() == doctest::Approx(0.475));
  const auto rows = density_matrix_table(14, 200, 42, 1, {0.125});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ratio == doctest::Approx(rows[0].mc / rows[0].asymptote));
  CHECK(rows[0].exact_ratio > 0.8);
  CHECK(rows[0].exact_ratio < 1.25);
}
