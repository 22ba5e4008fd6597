#pragma once

#include "context.hpp"

namespace vlx {

/// Waist data of a freely spreading packet.  t_g is the generation instant
/// (the waist), internal ct units.
struct WaistSpec {
  double sigma_w = 0.0;  ///< waist dispersion, nm
  double t_g = 0.0;      ///< ct-nm
  /// Diffraction time sigma_w^2 / lambda_C, ct-nm.
  double tau_d() const;
};

/// Dispersion, divergence rate and Gouy phase at one instant.
struct OpticalState {
  double sigma = 0.0;        ///< nm
  double sigma_prime = 0.0;  ///< d sigma / d(ct), dimensionless
  double phi_G = 0.0;        ///< rad
  double t = 0.0;            ///< ct-nm
  /// Radius of curvature sigma/sigma'; +-inf at a waist.
  double curvature_radius() const;
};

void validate_waist(const WaistSpec& w);

/// sigma_f(t) = sigma_w sqrt(1 + (t-t_g)^2/tau_d^2) and its derivative.
/// The Gouy phase entry is left at 0; it depends on the quantum numbers.
OpticalState free_dispersion(const WaistSpec& w, double t);

/// Phi_f(t) = (2n+|l|+1) arctan((t-t_g)/tau_d); zero at the waist.
double free_gouy(const QuantumNumbers& qn, const WaistSpec& w, double t);

/// Dispersion, rate and Gouy phase bundled.
OpticalState free_optics(const QuantumNumbers& qn, const WaistSpec& w, double t);

/// Free propagation from an arbitrary (sigma0, sigma0') state at t0:
/// sigma^2(t) = sigma0^2 + 2 sigma0 sigma0' tau + (sigma0'^2 + lambda_C^2/sigma0^2) tau^2.
/// Exact solution of sigma'' = lambda_C^2 / sigma^3.
OpticalState free_dispersion_general(double sigma0, double sigma0_prime,
                                     double t0, double t);

/// Gouy phase for the same general state, zero at t0:
/// (2n+|l|+1) [ arctan((a tau + sigma0 sigma0')/lambda_C) - arctan(sigma0 sigma0'/lambda_C) ]
/// with a = sigma0'^2 + lambda_C^2/sigma0^2.  Monotone; never wraps.
double free_gouy_general(const QuantumNumbers& qn, double sigma0,
                         double sigma0_prime, double t0, double t);

/// rho_f(t) = sigma_f(t) sqrt(2n+|l|+1).
double free_rms_radius(const QuantumNumbers& qn, const WaistSpec& w, double t);

/// Time-independent mean transverse energy (2n+|l|+1)/(2 tau_d), 1/nm.
double free_energy(const QuantumNumbers& qn, const WaistSpec& w);

}  // namespace vlx
