#pragma once

#include <complex>

#include "context.hpp"

namespace vlx {

/// Stationary transverse eigenstate in a uniform field (symmetric gauge).
struct LandauMode {
  QuantumNumbers qn;
  FieldContext ctx;
  double E_L = 0.0;    ///< (omega/2)(2n+|l|+l+1), natural 1/nm
  double rho_L = 0.0;  ///< sigma_L sqrt(2n+|l|+1), nm
};

LandauMode landau_mode(const QuantumNumbers& qn, const FieldContext& ctx);

/// Psi^(L)_{nl}(rho, phi, t): the stationary mode with its e^{-i E_L t}
/// evolution factor.  t in ct units measured from the same origin as the
/// phases elsewhere.
std::complex<double> landau_amplitude(const LandauMode& mode, double rho,
                                      double phi, double t);

}  // namespace vlx
