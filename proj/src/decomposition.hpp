#pragma once

#include <complex>
#include <vector>

#include "context.hpp"
#include "field_packet.hpp"

namespace vlx {

/// Expansion of one in-field packet over the stationary modes sharing its l.
/// The coefficients carry no time dependence; the index is the stationary
/// radial number n'.
struct DecompositionResult {
  std::vector<std::complex<double>> coefficients;  ///< a_{n n' l}, n' = 0, 1, ...
  double zeta = 0.0;          ///< sigma_st / sigma_L of the packet
  int truncation_n_max = 0;   ///< largest n' evaluated
  double tail = 0.0;          ///< 1 - sum |a|^2 left past the truncation
};

/// One closed-form coefficient a_{n n' l}.  Magnitude and phase are
/// assembled separately: the magnitude from zeta alone (the sigma_L/sigma0
/// dependence cancels), the phase from the complex boundary parameter.
std::complex<double> landau_coefficient(const QuantumNumbers& qn, int n_prime,
                                        const FieldContext& ctx,
                                        const FieldInitialConditions& ic);

/// Full expansion.  The basis grows geometrically (16, 32, ..., 4096) until
/// the missing weight drops below tail_tolerance; past the cap a
/// convergence_error carrying the achieved tail is thrown.
DecompositionResult landau_coefficients(const QuantumNumbers& qn,
                                        const FieldInitialConditions& ic,
                                        const FieldContext& ctx,
                                        double tail_tolerance = 1e-10);

/// Independent check: the overlap of the stationary mode n' against the
/// packet, integrated numerically over the radial profiles of the
/// instantaneous optical state (sigma, sigma', phi_G, t).  Any instant
/// gives the same value.
std::complex<double> landau_coefficient_oracle(const QuantumNumbers& qn,
                                               int n_prime,
                                               const FieldContext& ctx,
                                               const OpticalState& st);

/// Oracle evaluated at the entry instant.
std::complex<double> landau_coefficient_oracle(const QuantumNumbers& qn,
                                               int n_prime,
                                               const FieldContext& ctx,
                                               const FieldInitialConditions& ic);

/// Inputs of the first-order tilted-axis mixing.
struct OffAxisParams {
  double alpha = 0.0;     ///< tilt between packet axis and field axis, rad
  double mean_p_z = 0.0;  ///< longitudinal momentum scale, 1/nm
  double sigma_t0 = 0.0;  ///< dispersion at the boundary, nm
  /// Dimensionless mixing strength alpha <p_z> sigma(t0) / (4 pi).
  double kappa() const;
};

/// |c_{n n' l l'}| to first order in the tilt: the identity plus
/// kappa-weighted couplings to the neighbouring angular momenta l' = l +- 1
/// (for l = 0 both signs carry the raising weight).  Zero elsewhere.
double off_axis_coefficient(const QuantumNumbers& qn, int n_prime, int l_prime,
                            const OffAxisParams& params);

struct OffAxisCoupling {
  int n_prime = 0;
  int l_prime = 0;
  double magnitude = 0.0;
};

/// Every nonzero entry: the diagonal plus at most four couplings (six when
/// l = 0).  Ordering is deterministic: diagonal first, then ascending
/// (l_prime, n_prime).
std::vector<OffAxisCoupling> off_axis_couplings(const QuantumNumbers& qn,
                                                const OffAxisParams& params);

}  // namespace vlx
