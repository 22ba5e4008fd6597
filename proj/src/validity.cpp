#include "validity.hpp"

#include <cmath>
#include <stdexcept>

namespace vlx {

namespace {

ValidityEntry make_entry(std::string id, double lhs, double rhs,
                         double threshold) {
  ValidityEntry e;
  e.condition = std::move(id);
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = rhs / lhs;
  e.nonrelativistic = e.margin > threshold;
  return e;
}

}  // namespace

bool ValidityReport::all_nonrelativistic() const {
  for (const ValidityEntry& e : entries)
    if (!e.nonrelativistic) return false;
  return !entries.empty();
}

ValidityReport validity_free(const QuantumNumbers& qn, double rho_w_nm,
                             double threshold) {
  validate_quantum_numbers(qn);
  if (!(rho_w_nm > 0.0))
    throw std::invalid_argument("waist radius must be positive");
  ValidityReport r;
  r.threshold = threshold;
  r.entries.push_back(make_entry("free", static_cast<double>(qn.N()),
                                 rho_w_nm / consts::lambda_C, threshold));
  return r;
}

ValidityReport validity_landau(const QuantumNumbers& qn,
                               const FieldContext& ctx, double threshold) {
  validate_quantum_numbers(qn);
  ValidityReport r;
  r.threshold = threshold;
  const double level = 2.0 * qn.n + qn.abs_l() + qn.l + 1.0;
  r.entries.push_back(make_entry("landau", std::sqrt(level),
                                 ctx.sigma_L / consts::lambda_C, threshold));
  return r;
}

ValidityReport validity_field(const QuantumNumbers& qn,
                              const FieldContext& ctx,
                              const FieldInitialConditions& ic,
                              double threshold) {
  validate_quantum_numbers(qn);
  const OscillationParams p = oscillation_params(ctx, ic);
  const double nn = static_cast<double>(qn.N());
  const double sL_over_lc = ctx.sigma_L / consts::lambda_C;
  const double zeta = p.zeta();

  ValidityReport r;
  r.threshold = threshold;
  r.entries.push_back(make_entry(
      "field", std::sqrt(nn * zeta * zeta + qn.l), sL_over_lc, threshold));
  r.entries.push_back(make_entry("field_average_size", std::sqrt(nn),
                                 sL_over_lc / zeta, threshold));
  r.entries.push_back(make_entry("field_entry_size", std::sqrt(nn),
                                 sL_over_lc * ctx.sigma_L / ic.sigma0,
                                 threshold));
  return r;
}

}  // namespace vlx
