#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "field_packet.hpp"

namespace vlx {

/// One transverse-relativity check: the state stays nonrelativistic while
/// lhs << rhs, quantified by margin = rhs/lhs.
struct ValidityEntry {
  std::string condition;  ///< short id of the inequality
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;          ///< rhs / lhs
  bool nonrelativistic = false; ///< margin > threshold
};

struct ValidityReport {
  std::vector<ValidityEntry> entries;
  double threshold = 10.0;  ///< how much headroom counts as "<<"
  /// True when every entry clears the threshold.
  bool all_nonrelativistic() const;
};

/// Free packet: 2n+|l|+1 << rho_w/lambda_C.
ValidityReport validity_free(const QuantumNumbers& qn, double rho_w_nm,
                             double threshold = 10.0);

/// Stationary mode: sqrt(2n+|l|+l+1) << sigma_L/lambda_C.
ValidityReport validity_landau(const QuantumNumbers& qn,
                               const FieldContext& ctx,
                               double threshold = 10.0);

/// In-field packet, three forms of the same bound:
///  - full:          sqrt(N sigma_st^2/sigma_L^2 + l) << sigma_L/lambda_C
///  - average-size:  sqrt(N) << (sigma_L/lambda_C)(sigma_L/sigma_st)
///  - entry-size:    sqrt(N) << (sigma_L/lambda_C)(sigma_L/sigma_0)
ValidityReport validity_field(const QuantumNumbers& qn,
                              const FieldContext& ctx,
                              const FieldInitialConditions& ic,
                              double threshold = 10.0);

}  // namespace vlx
