#include "landau.hpp"

#include <cmath>

#include "wavefunction.hpp"

namespace vlx {

LandauMode landau_mode(const QuantumNumbers& qn, const FieldContext& ctx) {
  validate_quantum_numbers(qn);
  LandauMode m;
  m.qn = qn;
  m.ctx = ctx;
  m.E_L = 0.5 * ctx.omega * (2.0 * qn.n + qn.abs_l() + qn.l + 1.0);
  m.rho_L = ctx.sigma_L * std::sqrt(static_cast<double>(qn.N()));
  return m;
}

std::complex<double> landau_amplitude(const LandauMode& mode, double rho,
                                      double phi, double t) {
  const double f = radial_envelope(mode.qn, mode.ctx.sigma_L, rho);
  return std::polar(f, mode.qn.l * phi - mode.E_L * t);
}

}  // namespace vlx
