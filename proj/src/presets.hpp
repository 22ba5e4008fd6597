#pragma once

#include <string>
#include <vector>

#include "context.hpp"

namespace vlx {

enum class PresetKind {
  free_waist,        ///< freely spreading packet defined by its waist
  field_entry,       ///< in-field packet defined by its boundary state
  field_from_waist,  ///< waist at the boundary, followed in several fields
};

/// One named parameter set of the reproduction suite.  Figure and
/// decomposition commands read these records; nothing is hard-coded at the
/// call sites.
struct Preset {
  std::string id;
  PresetKind kind = PresetKind::field_entry;
  QuantumNumbers qn;
  /// Extra mode list for multi-curve presets (Gouy phase comparisons).
  std::vector<QuantumNumbers> qn_list;
  double H_tesla = 0.0;         ///< 0 when no field is involved
  std::vector<double> H_list;   ///< multi-field sweeps
  double sigma_w_nm = 0.0;      ///< waist dispersion (waist kinds)
  double sigma0_nm = 0.0;       ///< entry dispersion (field_entry)
  double sigma0_prime = 0.0;
  double phi0 = 0.0;
  double t0_ns = 0.0;
  double e_parallel_keV = 0.0;  ///< 0 when no z mapping is requested
  double t_end_ns = 0.0;        ///< default series span past t0
  int samples = 0;
  std::string note;
};

/// Monotonically bumped whenever any entry changes.
const std::string& preset_table_version();

const std::vector<Preset>& preset_table();

/// nullptr when the id is unknown.
const Preset* find_preset(const std::string& id);

std::vector<std::string> preset_ids();

}  // namespace vlx
