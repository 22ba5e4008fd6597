#include "wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "constants.hpp"
#include "laguerre.hpp"

namespace vlx {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double radial_envelope(const QuantumNumbers& qn, double sigma, double rho) {
  validate_quantum_numbers(qn);
  if (!(sigma > 0.0) || !(rho >= 0.0)) {
    throw std::invalid_argument("radial evaluation needs sigma > 0, rho >= 0");
  }
  const int al = qn.abs_l();
  if (rho == 0.0) {
    if (al > 0) return 0.0;
    const double log_pref = log_norm_ratio(qn.n, 0) - 0.5 * std::log(kPi);
    return std::exp(log_pref) / sigma * laguerre_scaled(qn.n, 0.0, 0.0);
  }
  const double x = (rho / sigma) * (rho / sigma);
  // (rho/sigma)^|l| folded into the exponent so large |l| cannot overflow;
  // the exp(-x/2) lives inside laguerre_scaled.
  const double scaled = laguerre_scaled(qn.n, al, x);
  if (scaled == 0.0) return 0.0;
  const double log_pref = log_norm_ratio(qn.n, al) - 0.5 * std::log(kPi) +
                          al * std::log(rho / sigma);
  const double mag = std::exp(log_pref + std::log(std::abs(scaled)));
  return std::copysign(mag, scaled) / sigma;
}

std::complex<double> nslg_amplitude(const QuantumNumbers& qn,
                                    const OpticalState& optics, double rho,
                                    double phi) {
  const double f = radial_envelope(qn, optics.sigma, rho);
  const double chirp = rho * rho * optics.sigma_prime /
                       (2.0 * consts::lambda_C * optics.sigma);
  const double phase = qn.l * phi - optics.phi_G + chirp;
  return std::polar(f, phase);
}

int density_ring_count(const QuantumNumbers& qn, const OpticalState& optics,
                       int samples) {
  validate_quantum_numbers(qn);
  if (samples < 16) throw std::invalid_argument("too few radial samples");
  // All radial structure of x^(|l|+1/2) L_n^2 e^-x lives below
  // x ~ 4n + 2|l| + O(1); pad generously.
  const double x_max = 4.0 * qn.n + 2.0 * qn.abs_l() + 16.0;
  const double rho_max = optics.sigma * std::sqrt(x_max);
  std::vector<double> p(samples);
  for (int i = 0; i < samples; ++i) {
    const double rho = rho_max * (i + 0.5) / samples;
    const double f = radial_envelope(qn, optics.sigma, rho);
    p[i] = 2.0 * kPi * rho * f * f;
  }
  int count = 0;
  for (int i = 1; i + 1 < samples; ++i) {
    if (p[i] > p[i - 1] && p[i] > p[i + 1]) ++count;
  }
  return count;
}

Eigen::MatrixXcd gram_matrix(const std::vector<QuantumNumbers>& modes,
                             const OpticalState& optics) {
  const int m = static_cast<int>(modes.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const QuantumNumbers &a = modes[i], &b = modes[j];
      if (a.l != b.l) continue;  // azimuthal orthogonality is exact
      const int al = a.abs_l();
      // <a|b> = pi N_a N_b sigma^2(|l|+1) ... reduces to the weight-space
      // integral of L_na L_nb against x^|l| e^-x; the chirp phases cancel
      // because both modes share (sigma, sigma').
      const GaussLaguerreRule rule =
          gauss_laguerre(a.n + b.n + 4, static_cast<double>(al));
      double acc = 0.0;
      for (std::size_t k = 0; k < rule.x.size(); ++k) {
        acc += rule.w[k] * laguerre(a.n, al, rule.x[k]) *
               laguerre(b.n, al, rule.x[k]);
      }
      const double val =
          std::exp(log_norm_ratio(a.n, al) + log_norm_ratio(b.n, al)) * acc;
      gram(i, j) = val;
      gram(j, i) = val;
    }
  }
  (void)optics;
  return gram;
}

PolarGrid sample_polar_grid(const QuantumNumbers& qn,
                            const OpticalState& optics, int n_rho, int n_phi,
                            double rho_max) {
  if (n_rho < 2 || n_phi < 1 || !(rho_max > 0.0)) {
    throw std::invalid_argument("bad polar grid shape");
  }
  PolarGrid g;
  g.rho.resize(n_rho);
  g.phi.resize(n_phi);
  g.amp.resize(static_cast<std::size_t>(n_rho) * n_phi);
  for (int i = 0; i < n_rho; ++i) {
    g.rho[i] = rho_max * i / (n_rho - 1);
  }
  for (int j = 0; j < n_phi; ++j) {
    g.phi[j] = 2.0 * kPi * j / n_phi;
  }
  for (int j = 0; j < n_phi; ++j) {
    for (int i = 0; i < n_rho; ++i) {
      g.amp[static_cast<std::size_t>(j) * n_rho + i] =
          nslg_amplitude(qn, optics, g.rho[i], g.phi[j]);
    }
  }
  return g;
}

}  // namespace vlx
