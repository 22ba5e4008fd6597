#include "emittance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlx {

namespace {

/// N^2 - 1 + b(b + 2l) with b = N sigma^2/sigma_L^2; the product form keeps
/// the bracket-minus-l^2 difference exact where the two nearly cancel.
double emittance_sq_over_lc2(const QuantumNumbers& qn, double sigma_sq,
                             double sigma_L_sq) {
  const double nn = static_cast<double>(qn.N());
  const double b = nn * sigma_sq / sigma_L_sq;
  const double val = (nn - 1.0) * (nn + 1.0) + b * (b + 2.0 * qn.l);
  return std::max(val, 0.0);
}

}  // namespace

double emittance_free(const QuantumNumbers& qn) {
  validate_quantum_numbers(qn);
  const double nn = static_cast<double>(qn.N());
  return consts::lambda_C * std::sqrt((nn - 1.0) * (nn + 1.0));
}

double emittance_field(const QuantumNumbers& qn, const OscillationParams& p,
                       const FieldContext& ctx, double t) {
  validate_quantum_numbers(qn);
  (void)ctx;  // sigma_L is carried by the oscillation parameters
  const OpticalState st = field_dispersion(p, t);
  return consts::lambda_C *
         std::sqrt(emittance_sq_over_lc2(qn, st.sigma * st.sigma, p.sigma_L_sq));
}

double emittance_landau(const QuantumNumbers& qn) {
  validate_quantum_numbers(qn);
  const double nn = static_cast<double>(qn.N());
  const double val = (nn - 1.0) * (nn + 1.0) + nn * (nn + 2.0 * qn.l);
  return consts::lambda_C * std::sqrt(std::max(val, 0.0));
}

EmittanceSeries emittance_series(const QuantumNumbers& qn,
                                 const OscillationParams& p,
                                 const FieldContext& ctx, double t_begin,
                                 double t_end, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (!(t_end > t_begin))
    throw std::invalid_argument("time range must be increasing");
  EmittanceSeries out;
  out.eps_f = emittance_free(qn);
  out.eps_L = emittance_landau(qn);
  out.t_grid.reserve(samples);
  out.eps_H.reserve(samples);
  const double dt = (t_end - t_begin) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double t = t_begin + i * dt;
    out.t_grid.push_back(t);
    out.eps_H.push_back(emittance_field(qn, p, ctx, t));
  }
  return out;
}

ClassicalityWindow classicality_window(const QuantumNumbers& qn) {
  validate_quantum_numbers(qn);
  ClassicalityWindow w;
  if (qn.l >= 0) return w;
  const double nn = static_cast<double>(qn.N());
  const double al = static_cast<double>(qn.abs_l());
  w.lower = nn / (4.0 * al) + al / nn;
  w.upper = 2.0 * al / nn;
  w.nonempty = w.lower < w.upper;
  if (!w.nonempty) {
    w.lower = 0.0;
    w.upper = 0.0;
  }
  return w;
}

bool emittance_dip_exists(const QuantumNumbers& qn,
                          const OscillationParams& p) {
  validate_quantum_numbers(qn);
  if (qn.l >= 0) return false;
  return qn.N() * p.sigma_min_sq() < 2.0 * qn.abs_l() * p.sigma_L_sq;
}

}  // namespace vlx
