#include "context.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlx {

double FieldContext::Tc_ct() const { return 2.0 * std::numbers::pi / omega; }

double FieldContext::Tc_ns() const { return consts::ct_to_ns(Tc_ct()); }

double FieldContext::omega_rad_per_ns() const {
  return omega * consts::c_nm_per_ns;
}

FieldContext field_context(double H_tesla) {
  if (!std::isfinite(H_tesla) || H_tesla <= 0.0)
    throw std::invalid_argument("field strength must be finite and positive");
  FieldContext ctx;
  ctx.H_tesla = H_tesla;
  const double e0H = consts::e0_over_hbar_nm2_T * H_tesla;  // 1/nm^2
  ctx.sigma_L = std::sqrt(2.0 / e0H);
  // omega = e0 H / m; 1/m = lambda_C in natural units, so
  // sigma_L^2 * omega = 2 lambda_C holds exactly.
  ctx.omega = e0H * consts::lambda_C;
  return ctx;
}

double kinetic_energy_to_beta(double e_parallel_keV) {
  if (!std::isfinite(e_parallel_keV) || e_parallel_keV <= 0.0)
    throw std::invalid_argument("kinetic energy must be finite and positive");
  const double gamma = 1.0 + e_parallel_keV / consts::rest_energy_keV;
  return std::sqrt(1.0 - 1.0 / (gamma * gamma));
}

void validate_quantum_numbers(const QuantumNumbers& qn) {
  if (qn.n < 0) throw std::invalid_argument("radial quantum number must be >= 0");
}

}  // namespace vlx
