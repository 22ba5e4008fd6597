#pragma once

#include "constants.hpp"

namespace vlx {

/// Radial quantum number n >= 0 and orbital angular momentum l.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  /// Principal combination 2n + |l| + 1.
  int N() const { return 2 * n + (l < 0 ? -l : l) + 1; }
  int abs_l() const { return l < 0 ? -l : l; }
};

/// Magnetic field strength with its derived scales.  All stored quantities
/// are in internal units (nm, ct-nm); accessors convert on demand.
struct FieldContext {
  double H_tesla = 0.0;
  double sigma_L = 0.0;   ///< dispersion of the n=l=0 stationary mode, nm
  double omega = 0.0;     ///< cyclotron angular frequency, rad per ct-nm

  double Tc_ct() const;   ///< cyclotron period, ct-nm
  double Tc_ns() const;
  double omega_rad_per_ns() const;
  /// Zeeman splitting mu_B * H in natural units (1/nm); equals omega/2.
  double mu_B_H() const { return 0.5 * omega; }
};

/// Build the derived field scales for H > 0 (tesla).
FieldContext field_context(double H_tesla);

/// v/c for a given longitudinal kinetic energy in keV.
double kinetic_energy_to_beta(double e_parallel_keV);

void validate_quantum_numbers(const QuantumNumbers& qn);

}  // namespace vlx
