#pragma once

#include <complex>
#include <vector>

namespace vlx {

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term upward
/// recurrence in n (stable for the argument ranges used here).  Works for
/// real and complex arguments.
template <typename T>
T laguerre(int n, double alpha, T x) {
  if (n == 0) return T(1);
  T lkm1 = T(1);
  T lk = T(1.0 + alpha) - x;
  for (int k = 1; k < n; ++k) {
    T lkp1 = ((T(2.0 * k + 1.0 + alpha) - x) * lk - T(k + alpha) * lkm1) / T(k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
template <typename T>
T laguerre_derivative(int n, double alpha, T x) {
  if (n == 0) return T(0);
  return -laguerre(n - 1, alpha + 1.0, x);
}

/// L_n^alpha(x) * exp(-x/2) for real x >= 0, evaluated by running the
/// recurrence on the pre-scaled sequence.  Unlike computing the two factors
/// separately, this cannot overflow for large x (the result underflows to 0
/// gracefully); intermediate values stay in range for n up to ~10^3.
double laguerre_scaled(int n, double alpha, double x);

/// log( sqrt(n! / (n+|l|)!) ), the mode-dependent part of the transverse
/// normalization, in log domain so n, |l| up to ~1e3 stay representable.
double log_norm_ratio(int n, int abs_l);

/// Gauss quadrature rule for the weight x^alpha e^{-x} on (0, inf):
/// integral x^alpha e^{-x} f(x) dx = sum_j w[j] f(x[j]), exact for
/// polynomials f of degree <= 2*order - 1.
struct GaussLaguerreRule {
  double alpha = 0.0;
  std::vector<double> x;
  std::vector<double> w;
};

/// Golub-Welsch construction (symmetric tridiagonal eigenproblem).
/// Requires order >= 1 and alpha > -1; alpha is further capped so the
/// zeroth moment Gamma(alpha+1) stays inside double range.
GaussLaguerreRule gauss_laguerre(int order, double alpha);

}  // namespace vlx
