#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "laguerre.hpp"

using namespace vlx;

TEST_CASE("low-order polynomials match explicit forms") {
  for (double a : {0.0, 1.0, 3.0, 7.5}) {
    for (double x : {0.0, 0.3, 1.7, 6.0}) {
      CHECK(laguerre(0, a, x) == 1.0);
      CHECK(std::abs(laguerre(1, a, x) - (1.0 + a - x)) < 1e-14);
      const double l2 = 0.5 * x * x - (a + 2.0) * x + 0.5 * (a + 1) * (a + 2);
      CHECK(std::abs(laguerre(2, a, x) - l2) < 1e-12);
    }
  }
}

TEST_CASE("complex argument reduces to the real evaluation") {
  const std::complex<double> z(1.3, 0.0);
  CHECK(std::abs(laguerre(5, 2.0, z).real() - laguerre(5, 2.0, 1.3)) < 1e-12);
  CHECK(std::abs(laguerre(5, 2.0, z).imag()) < 1e-12);
  // A genuinely complex argument keeps the defining recurrence:
  // (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}.
  const std::complex<double> w(0.4, -1.1);
  const double a = 3.0;
  for (int n = 1; n < 8; ++n) {
    const std::complex<double> lhs = (n + 1.0) * laguerre(n + 1, a, w);
    const std::complex<double> rhs =
        (2.0 * n + 1.0 + a - w) * laguerre(n, a, w) -
        (n + a) * laguerre(n - 1, a, w);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("derivative identity against finite differences") {
  const double h = 1e-6;
  for (int n : {1, 3, 6}) {
    for (double a : {0.0, 2.0, 5.0}) {
      for (double x : {0.5, 2.5, 9.0}) {
        const double fd =
            (laguerre(n, a, x + h) - laguerre(n, a, x - h)) / (2.0 * h);
        CHECK(std::abs(laguerre_derivative(n, a, x) - fd) <
              1e-5 * (1.0 + std::abs(fd)));
      }
    }
  }
}

TEST_CASE("pre-scaled evaluation agrees and survives large arguments") {
  for (int n : {0, 2, 7}) {
    for (double a : {0.0, 3.0}) {
      for (double x : {0.1, 4.0, 40.0}) {
        const double direct = laguerre(n, a, x) * std::exp(-0.5 * x);
        CHECK(std::abs(laguerre_scaled(n, a, x) - direct) <
              1e-12 * (1.0 + std::abs(direct)));
      }
    }
  }
  // Far tail: the plain product overflows/underflows, the scaled form
  // stays finite (and is essentially zero).
  const double far = laguerre_scaled(50, 3.0, 5000.0);
  CHECK(std::isfinite(far));
  CHECK(std::abs(far) < 1e-200);
}

TEST_CASE("normalization ratio in log domain") {
  // sqrt(n!/(n+|l|)!) for small cases.
  CHECK(std::abs(std::exp(log_norm_ratio(0, 0)) - 1.0) < 1e-14);
  CHECK(std::abs(std::exp(log_norm_ratio(1, 2)) - std::sqrt(1.0 / 6.0)) <
        1e-14);
  CHECK(std::abs(std::exp(log_norm_ratio(2, 3)) - std::sqrt(2.0 / 120.0)) <
        1e-14);
  // Huge indices stay representable.
  CHECK(std::isfinite(log_norm_ratio(500, 300)));
}

TEST_CASE("quadrature rule basics") {
  const GaussLaguerreRule r = gauss_laguerre(12, 3.0);
  REQUIRE(r.x.size() == 12);
  REQUIRE(r.w.size() == 12);
  double prev = 0.0;
  double wsum = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    CHECK(r.x[i] > prev);
    CHECK(r.w[i] > 0.0);
    prev = r.x[i];
    wsum += r.w[i];
  }
  // Sum of weights integrates 1 against x^3 e^-x: Gamma(4) = 6.
  CHECK(std::abs(wsum - 6.0) < 1e-10);
}

TEST_CASE("quadrature integrates monomials exactly") {
  // Order m is exact through degree 2m-1: integral x^(a+k) e^-x
  // = Gamma(a+k+1).
  const int m = 9;
  const double a = 2.0;
  const GaussLaguerreRule r = gauss_laguerre(m, a);
  for (int k = 0; k <= 2 * m - 1; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
      s += r.w[i] * std::pow(r.x[i], k);
    const double exact = std::tgamma(a + k + 1.0);
    CHECK(std::abs(s / exact - 1.0) < 1e-11);
  }
}

TEST_CASE("quadrature orthonormality of the weighted polynomials") {
  // integral x^a e^-x L_n^a L_m^a = Gamma(n+a+1)/n! delta_nm.
  const double a = 4.0;
  const GaussLaguerreRule r = gauss_laguerre(16, a);
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.x.size(); ++i)
        s += r.w[i] * laguerre(n, a, r.x[i]) * laguerre(m, a, r.x[i]);
      const double norm =
          std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0));
      if (n == m)
        CHECK(std::abs(s / norm - 1.0) < 1e-12);
      else
        CHECK(std::abs(s) / norm < 1e-11);
    }
  }
}

TEST_CASE("quadrature input validation") {
  CHECK_THROWS_AS(gauss_laguerre(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(4, 281.0), std::invalid_argument);
  CHECK_NOTHROW(gauss_laguerre(4, 280.0));
}
