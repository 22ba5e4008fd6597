#pragma once

#include <vector>

#include "context.hpp"
#include "field_packet.hpp"

namespace vlx {

/// Quantum r.m.s. emittance sqrt(<rho^2><v^2> - |<rho.v>|^2) of the free
/// packet: time independent and minimal for given quantum numbers.  nm.
double emittance_free(const QuantumNumbers& qn);

/// Emittance of the in-field packet at time t; the divergence rate cancels
/// exactly, leaving the dispersion alone:
///   eps_H = lambda_C sqrt(N^2 - 1 + [N sigma^2/sigma_L^2 + l]^2 - l^2),
/// N = 2n+|l|+1.  Periodic with the cyclotron period.  nm.
double emittance_field(const QuantumNumbers& qn, const OscillationParams& p,
                       const FieldContext& ctx, double t);

/// Emittance of the stationary mode (sigma == sigma_L).  nm.
double emittance_landau(const QuantumNumbers& qn);

/// Sampled emittance history plus the two time-independent references.
/// Total emittance; the per-axis value is total/2 (see per_axis).
struct EmittanceSeries {
  std::vector<double> t_grid;  ///< ct-nm
  std::vector<double> eps_H;   ///< nm
  double eps_f = 0.0;          ///< nm
  double eps_L = 0.0;          ///< nm
  static double per_axis(double total) { return 0.5 * total; }
  static double in_lambda_C(double eps_nm) { return eps_nm / consts::lambda_C; }
};

EmittanceSeries emittance_series(const QuantumNumbers& qn,
                                 const OscillationParams& p,
                                 const FieldContext& ctx, double t_begin,
                                 double t_end, int samples);

/// Interval of sigma_st^2/sigma_L^2 inside which the in-field emittance is
/// expected to dip below the free one; nonempty only for l < 0 with
/// |l| > 2n + 1.
struct ClassicalityWindow {
  bool nonempty = false;
  double lower = 0.0;
  double upper = 0.0;
};

ClassicalityWindow classicality_window(const QuantumNumbers& qn);

/// Exact criterion for the dip: some t with eps_H(t) < eps_f exists iff
/// l < 0 and N sigma_min^2 < 2|l| sigma_L^2.  (The window above is the
/// heuristic in terms of the average size; this is the sharp statement in
/// terms of the minimum size.)
bool emittance_dip_exists(const QuantumNumbers& qn,
                          const OscillationParams& p);

}  // namespace vlx
