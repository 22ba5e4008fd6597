#include "free_packet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "constants.hpp"

namespace vlx {

double WaistSpec::tau_d() const { return sigma_w * sigma_w / consts::lambda_C; }

double OpticalState::curvature_radius() const {
  if (sigma_prime == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sigma / sigma_prime;
}

void validate_waist(const WaistSpec& w) {
  if (!std::isfinite(w.sigma_w) || w.sigma_w <= 0.0) {
    throw std::invalid_argument("waist dispersion must be finite and positive");
  }
  if (!std::isfinite(w.t_g)) {
    throw std::invalid_argument("generation time must be finite");
  }
}

OpticalState free_dispersion(const WaistSpec& w, double t) {
  validate_waist(w);
  const double tau = t - w.t_g;
  const double td = w.tau_d();
  const double u = tau / td;
  const double root = std::sqrt(1.0 + u * u);
  OpticalState s;
  s.sigma = w.sigma_w * root;
  // d sigma/dt = sigma_w * u/sqrt(1+u^2) * (1/td)
  s.sigma_prime = w.sigma_w * u / (root * td);
  s.t = t;
  return s;
}

double free_gouy(const QuantumNumbers& qn, const WaistSpec& w, double t) {
  validate_waist(w);
  validate_quantum_numbers(qn);
  const double tau = t - w.t_g;
  return static_cast<double>(qn.N()) * std::atan(tau / w.tau_d());
}

OpticalState free_optics(const QuantumNumbers& qn, const WaistSpec& w, double t) {
  OpticalState s = free_dispersion(w, t);
  s.phi_G = free_gouy(qn, w, t);
  return s;
}

namespace {

void validate_general_state(double sigma0, double sigma0_prime, double t0) {
  if (!std::isfinite(sigma0) || sigma0 <= 0.0) {
    throw std::invalid_argument("dispersion must be finite and positive");
  }
  if (!std::isfinite(sigma0_prime) || !std::isfinite(t0)) {
    throw std::invalid_argument("dispersion rate and time must be finite");
  }
}

}  // namespace

OpticalState free_dispersion_general(double sigma0, double sigma0_prime,
                                     double t0, double t) {
  validate_general_state(sigma0, sigma0_prime, t0);
  const double lc = consts::lambda_C;
  const double tau = t - t0;
  const double a = sigma0_prime * sigma0_prime + (lc / sigma0) * (lc / sigma0);
  const double sq =
      sigma0 * sigma0 + 2.0 * sigma0 * sigma0_prime * tau + a * tau * tau;
  OpticalState s;
  s.sigma = std::sqrt(sq);
  s.sigma_prime = (sigma0 * sigma0_prime + a * tau) / s.sigma;
  s.t = t;
  return s;
}

double free_gouy_general(const QuantumNumbers& qn, double sigma0,
                         double sigma0_prime, double t0, double t) {
  validate_general_state(sigma0, sigma0_prime, t0);
  validate_quantum_numbers(qn);
  const double lc = consts::lambda_C;
  const double tau = t - t0;
  const double a = sigma0_prime * sigma0_prime + (lc / sigma0) * (lc / sigma0);
  const double b = sigma0 * sigma0_prime;
  return static_cast<double>(qn.N()) *
         (std::atan((a * tau + b) / lc) - std::atan(b / lc));
}

double free_rms_radius(const QuantumNumbers& qn, const WaistSpec& w, double t) {
  const OpticalState s = free_dispersion(w, t);
  validate_quantum_numbers(qn);
  return s.sigma * std::sqrt(static_cast<double>(qn.N()));
}

double free_energy(const QuantumNumbers& qn, const WaistSpec& w) {
  validate_waist(w);
  validate_quantum_numbers(qn);
  return static_cast<double>(qn.N()) / (2.0 * w.tau_d());
}

}  // namespace vlx
