#pragma once

#include <vector>

#include "context.hpp"
#include "free_packet.hpp"

namespace vlx {

/// State of the packet at the instant it crosses into the field region.
struct FieldInitialConditions {
  double sigma0 = 0.0;        ///< nm
  double sigma0_prime = 0.0;  ///< dimensionless
  double t0 = 0.0;            ///< ct-nm
  double phi0 = 0.0;          ///< Gouy phase carried across the boundary, rad
};

void validate_field_ic(const FieldInitialConditions& ic);

/// Parameters of sigma^2(t) = sigma_st^2 (1 + A sin(s w (t-t0) - theta))
/// inside the field.  Everything needed to evaluate the motion is kept here
/// so downstream code does not have to re-derive it.
struct OscillationParams {
  double sigma_st_sq = 0.0;  ///< nm^2
  double A = 0.0;            ///< modulation depth of sigma^2, in [0,1)
  double theta = 0.0;        ///< phase offset, rad, in [-pi/2, pi/2]
  int s = 0;                 ///< direction sign: -1, 0 (stationary) or +1
  double omega = 0.0;        ///< rad per ct-nm
  double sigma_L_sq = 0.0;   ///< nm^2
  double t0 = 0.0;           ///< ct-nm
  double phi0 = 0.0;         ///< rad
  /// sigma_st^2 - sigma_L^2, evaluated without cancellation.
  double D = 0.0;

  double sigma_st() const;
  double sigma_L() const;
  /// Extremes of the breathing cycle; min is evaluated cancellation-free.
  double sigma_min_sq() const;
  double sigma_max_sq() const;
  /// 1 - A without cancellation: (sigma_L^2/sigma_st^2)^2 / (1 + A).
  /// Tiny in the weak-field limit, where it controls the depth of the
  /// breathing minima.
  double one_minus_A() const;
  double zeta() const;  ///< sigma_st / sigma_L >= 1
  double zeta_sq_minus_one() const;
  double period_ct() const;
};

/// Solve for the oscillation parameters from the entry conditions.
/// An entry state matching the stationary size with zero rate (relative
/// tolerance 1e-12 on sigma0) is snapped to the exact non-breathing
/// solution (s = 0, A = 0).
OscillationParams oscillation_params(const FieldContext& ctx,
                                     const FieldInitialConditions& ic);

/// sigma, sigma' at time t inside the field.  Gouy entry left at 0.
OpticalState field_dispersion(const OscillationParams& p, double t);

/// Gouy phase at time t inside the field (continuous, unwrapped).
double field_gouy(const QuantumNumbers& qn, const OscillationParams& p,
                  double t);

/// Dispersion, rate and Gouy phase bundled.
OpticalState field_optics(const QuantumNumbers& qn, const OscillationParams& p,
                          double t);

/// r.m.s. radius sigma(t) sqrt(2n+|l|+1).
double field_rms_radius(const QuantumNumbers& qn, const OscillationParams& p,
                        double t);

/// Conserved mean transverse energy, natural 1/nm:
/// (w/2) [ (2n+|l|+1) sigma_st^2/sigma_L^2 + l ].
double field_energy(const FieldContext& ctx, const QuantumNumbers& qn,
                    const OscillationParams& p);

/// Same quantity assembled from an instantaneous state; equals field_energy
/// at every t and is used to cross-check conservation.
double field_energy_instant(const FieldContext& ctx, const QuantumNumbers& qn,
                            const OpticalState& st);

enum class Regime { landau_like, sine_like, bouncing };

struct RegimeThresholds {
  double landau_A = 0.05;     ///< A below this counts as quasi-stationary
  double bouncing_zeta = 5.0; ///< sigma_st/sigma_L at or above this bounces
};

Regime classify_regime(const OscillationParams& p,
                       const RegimeThresholds& th = {});

const char* regime_name(Regime r);

/// Dimensionless mismatch measures between the entry state and the
/// stationary solution.
struct ComparisonMetrics {
  double xi1 = 0.0;         ///< sigma_L / sigma0
  double xi2 = 0.0;         ///< |sigma0'| sigma_L / lambda_C
  double zeta = 0.0;        ///< sigma_st / sigma_L >= 1
  double delta_zeta = 0.0;  ///< zeta - 1, evaluated cancellation-free
};

ComparisonMetrics comparison_metrics(const FieldContext& ctx,
                                     const FieldInitialConditions& ic);

/// Entry conditions for a packet generated at a field-free waist that
/// drifts to the boundary and crosses at t0.
FieldInitialConditions free_to_field(const QuantumNumbers& qn,
                                     const WaistSpec& w, double t0);

/// Worst relative deviation over t_grid between the in-field dispersion and
/// the free-space dispersion of the same entry state, for each field value.
/// Quantifies how the guided solution degenerates to free spreading as the
/// field is removed.
std::vector<double> vanishing_field_deviation(
    const QuantumNumbers& qn, const WaistSpec& w, double t0,
    const std::vector<double>& H_tesla, const std::vector<double>& t_grid);

}  // namespace vlx
