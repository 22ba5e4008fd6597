#include "laguerre.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace vlx {

double log_norm_ratio(int n, int abs_l) {
  return 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + abs_l + 1.0));
}

double laguerre_scaled(int n, double alpha, double x) {
  const double s = std::exp(-0.5 * x);
  if (n == 0) return s;
  double lkm1 = s;
  double lk = (1.0 + alpha - x) * s;
  for (int k = 1; k < n; ++k) {
    const double lkp1 =
        ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

GaussLaguerreRule gauss_laguerre(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (alpha <= -1.0 || alpha > 280.0)
    throw std::invalid_argument("quadrature weight exponent out of range");

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (int i = 0; i < order; ++i) {
    J(i, i) = 2.0 * i + alpha + 1.0;
    if (i > 0) {
      const double b = std::sqrt(i * (i + alpha));
      J(i, i - 1) = b;
      J(i - 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quadrature eigen decomposition failed");

  GaussLaguerreRule rule;
  rule.alpha = alpha;
  rule.x.resize(order);
  rule.w.resize(order);
  const double log_mu0 = std::lgamma(alpha + 1.0);
  for (int j = 0; j < order; ++j) {
    rule.x[j] = es.eigenvalues()(j);
    const double v0 = es.eigenvectors()(0, j);
    rule.w[j] = std::exp(log_mu0 + 2.0 * std::log(std::abs(v0)));
  }
  return rule;
}

}  // namespace vlx
