#pragma once

#include <complex>
#include <vector>

#include "context.hpp"
#include "free_packet.hpp"

namespace vlx {

/// Which optical-function system to integrate.
enum class OdeSystem { free_space, in_field };

struct OdeInitial {
  double sigma = 0.0;
  double sigma_prime = 0.0;
  double phi_G = 0.0;
  double t0 = 0.0;
};

struct OdeRun {
  std::vector<OpticalState> trajectory;  ///< includes both endpoints
  double step = 0.0;                     ///< outer step actually used
  int refinement = 1;                    ///< inner substeps per outer step
};

/// Classic fixed-step 4th-order integration of
///   sigma'' = lambda_C^2/sigma^3 (- lambda_C^2 sigma / sigma_L^4 in field)
///   phi_G'  = lambda_C (2n+|l|+1)/sigma^2 (+ lambda_C l / sigma_L^2 in field)
/// sampled every `step`.  The whole run restarts with doubled substep count
/// whenever a step drives sigma out of (0, inf) or two consecutive
/// refinement levels disagree on the outer grid (whole-run step doubling);
/// past 2^10 substeps a convergence_error is thrown.  ctx may be null for
/// the free system.
OdeRun integrate_optical(OdeSystem sys, const QuantumNumbers& qn,
                         const OdeInitial& init, double step, double t_end,
                         const FieldContext* ctx);

/// Exact radial integrals of the mode profile f and its derivative,
/// assembled by Gauss-Laguerre quadrature (never from the closed-form
/// moments they are used to verify).
struct RadialMoments {
  double norm = 0.0;      ///< integral f^2 d^2rho (== 1)
  double rho2 = 0.0;      ///< integral rho^2 f^2 d^2rho
  double grad_sq = 0.0;   ///< integral f'^2 d^2rho
  double inv_rho2 = 0.0;  ///< integral f^2/rho^2 d^2rho (0 when l = 0)
  double cross = 0.0;     ///< 2 pi integral rho^2 f f' drho (== -1)
};

RadialMoments radial_moments(const QuantumNumbers& qn, double sigma);

/// <rho^2> over the sampled state.
double expect_rho2(const QuantumNumbers& qn, const OpticalState& st);

/// Mean transverse kinetic energy of the free state, 1/nm.
double expect_energy_free(const QuantumNumbers& qn, const OpticalState& st);

/// Mean transverse energy in the field (symmetric-gauge vector potential).
double expect_energy_field(const QuantumNumbers& qn, const OpticalState& st,
                           const FieldContext& ctx);

/// <rho . v> with the kinetic velocity operator; the imaginary part is the
/// quantum commutator contribution +i lambda_C.
std::complex<double> expect_rho_dot_v(const QuantumNumbers& qn,
                                      const OpticalState& st);

/// <v^2> = 2 lambda_C <E>; pass ctx for the in-field operator.
double expect_v2(const QuantumNumbers& qn, const OpticalState& st,
                 const FieldContext* ctx);

/// Moment-based emittance sqrt(<rho^2><v^2> - |<rho.v>|^2), nm.
double oracle_emittance(const QuantumNumbers& qn, const OpticalState& st,
                        const FieldContext* ctx);

}  // namespace vlx
