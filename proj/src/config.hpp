#pragma once

#include <map>
#include <string>

namespace vlx {

/// Line-oriented UTF-8 config: `[section]` headers, `key = value` pairs,
/// `#` comment lines.  Parsing is strict: stray text, duplicate keys and
/// keys outside any section are errors (std::invalid_argument).
struct ParsedConfig {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& section, const std::string& key) const;
  const std::string& get(const std::string& section,
                         const std::string& key) const;
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

/// Scenario description: a packet generated at a waist, drifting to the
/// solenoid boundary, then followed inside the field.  Positions are mapped
/// to times through the constant longitudinal velocity.
struct ScenarioConfig {
  // [source]
  double sigma_w_nm = 0.0;
  int n = 0;
  int l = 0;
  double e_parallel_keV = 0.0;
  // [geometry]
  double z_g_mm = 0.0;  ///< waist position
  double z_0_mm = 0.0;  ///< boundary position, >= z_g
  // [field]
  double H_tesla = 0.0;
  // [output]
  double t_max_ns = 0.0;    ///< how long to follow the packet in the field
  int samples = 0;          ///< field-segment samples
  int samples_free = 0;     ///< drift-segment samples (defaults to samples)
  std::string prefix = "scenario";
};

/// Parse + schema-validate; unknown sections or keys are hard errors.
ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig scenario_config_from_text(const std::string& text);

}  // namespace vlx
