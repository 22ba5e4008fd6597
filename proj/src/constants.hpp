#pragma once

/// Physical constants and unit conversions.
///
/// Internally the library works in natural units with hbar = c = 1: lengths
/// are carried in nanometers and time as ct, also in nanometers.  With that
/// choice every optical-function formula holds verbatim (tau_d = sigma_w^2 /
/// lambda_C, sigma_L^2 * omega = 2 lambda_C, ...).  Seconds and
/// electron-volts appear only at the API edge.

namespace vlx::consts {

/// Reduced Compton wavelength of the electron, nm (CODATA 2018).
inline constexpr double lambda_C = 3.8615926796e-4;

/// Electron rest energy, keV (CODATA 2018).
inline constexpr double rest_energy_keV = 510.99895;

/// Speed of light, nm per ns.
inline constexpr double c_nm_per_ns = 2.99792458e8;

/// e0/hbar expressed in 1/(T nm^2): e0*H/hbar is the inverse squared
/// magnetic length, so sigma_L = sqrt(2 / (e0_over_hbar * H)).
/// From e0 = 1.602176634e-19 C and hbar = 1.054571817e-34 J s.
inline constexpr double e0_over_hbar_nm2_T = 1.602176634e-19 / 1.054571817e-34 * 1e-18;

/// hbar*c in keV nm; equals lambda_C * rest_energy_keV by construction.
inline constexpr double hbarc_keV_nm = lambda_C * rest_energy_keV;

inline constexpr double ns_to_ct(double t_ns) { return t_ns * c_nm_per_ns; }
inline constexpr double ct_to_ns(double t_ct) { return t_ct / c_nm_per_ns; }

/// Natural-unit energy (1/nm) to keV.
inline constexpr double energy_to_keV(double e_inv_nm) { return e_inv_nm * hbarc_keV_nm; }

}  // namespace vlx::consts
