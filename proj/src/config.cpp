#include "config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vlx {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line_no << ": " << what;
  throw std::invalid_argument(os.str());
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(out))
    throw std::invalid_argument("[" + section + "] " + key +
                                ": not a finite number: '" + value + "'");
  return out;
}

int parse_int(const std::string& section, const std::string& key,
              const std::string& value) {
  int out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last)
    throw std::invalid_argument("[" + section + "] " + key +
                                ": not an integer: '" + value + "'");
  return out;
}

}  // namespace

bool ParsedConfig::has(const std::string& section,
                       const std::string& key) const {
  const auto s = sections.find(section);
  return s != sections.end() && s->second.count(key) > 0;
}

const std::string& ParsedConfig::get(const std::string& section,
                                     const std::string& key) const {
  const auto s = sections.find(section);
  if (s == sections.end())
    throw std::invalid_argument("config: missing section [" + section + "]");
  const auto k = s->second.find(key);
  if (k == s->second.end())
    throw std::invalid_argument("config: missing key '" + key + "' in [" +
                                section + "]");
  return k->second;
}

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line_no, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) fail(line_no, "empty section name");
      cfg.sections[section];  // sections may legitimately be empty
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    if (section.empty()) fail(line_no, "key '" + key + "' outside any section");
    if (!cfg.sections[section].emplace(key, value).second)
      fail(line_no, "duplicate key '" + key + "' in [" + section + "]");
  }
  return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

/// Schema: every recognized key, so anything else can be rejected loudly.
const std::map<std::string, std::map<std::string, int>>& scenario_schema() {
  static const std::map<std::string, std::map<std::string, int>> schema = {
      {"source",
       {{"sigma_w_nm", 1}, {"n", 1}, {"l", 1}, {"e_parallel_kev", 1}}},
      {"geometry", {{"z_g_mm", 1}, {"z_0_mm", 1}}},
      {"field", {{"h_tesla", 1}}},
      {"output",
       {{"t_max_ns", 1},
        {"samples", 1},
        {"samples_free", 0},
        {"prefix", 0}}},
  };
  return schema;
}

ScenarioConfig scenario_from_parsed(const ParsedConfig& cfg) {
  const auto& schema = scenario_schema();
  for (const auto& [section, keys] : cfg.sections) {
    const auto s = schema.find(section);
    if (s == schema.end())
      throw std::invalid_argument("config: unknown section [" + section + "]");
    for (const auto& [key, value] : keys) {
      (void)value;
      if (s->second.find(key) == s->second.end())
        throw std::invalid_argument("config: unknown key '" + key + "' in [" +
                                    section + "]");
    }
  }
  for (const auto& [section, keys] : schema) {
    for (const auto& [key, required] : keys) {
      if (required && !cfg.has(section, key))
        throw std::invalid_argument("config: missing key '" + key + "' in [" +
                                    section + "]");
    }
  }

  ScenarioConfig sc;
  sc.sigma_w_nm = parse_double("source", "sigma_w_nm",
                               cfg.get("source", "sigma_w_nm"));
  sc.n = parse_int("source", "n", cfg.get("source", "n"));
  sc.l = parse_int("source", "l", cfg.get("source", "l"));
  sc.e_parallel_keV = parse_double("source", "e_parallel_kev",
                                   cfg.get("source", "e_parallel_kev"));
  sc.z_g_mm = parse_double("geometry", "z_g_mm", cfg.get("geometry", "z_g_mm"));
  sc.z_0_mm = parse_double("geometry", "z_0_mm", cfg.get("geometry", "z_0_mm"));
  sc.H_tesla = parse_double("field", "h_tesla", cfg.get("field", "h_tesla"));
  sc.t_max_ns =
      parse_double("output", "t_max_ns", cfg.get("output", "t_max_ns"));
  sc.samples = parse_int("output", "samples", cfg.get("output", "samples"));
  sc.samples_free = cfg.has("output", "samples_free")
                        ? parse_int("output", "samples_free",
                                    cfg.get("output", "samples_free"))
                        : sc.samples;
  if (cfg.has("output", "prefix")) sc.prefix = cfg.get("output", "prefix");

  if (!(sc.sigma_w_nm > 0.0))
    throw std::invalid_argument("config: sigma_w_nm must be > 0");
  if (sc.n < 0) throw std::invalid_argument("config: n must be >= 0");
  if (!(sc.e_parallel_keV > 0.0))
    throw std::invalid_argument("config: e_parallel_kev must be > 0");
  if (!(sc.z_0_mm >= sc.z_g_mm))
    throw std::invalid_argument(
        "config: boundary z_0_mm must not precede the waist z_g_mm");
  if (!(sc.H_tesla > 0.0))
    throw std::invalid_argument("config: h_tesla must be > 0");
  if (!(sc.t_max_ns > 0.0))
    throw std::invalid_argument("config: t_max_ns must be > 0");
  if (sc.samples < 2 || sc.samples_free < 2)
    throw std::invalid_argument("config: samples must be >= 2");
  if (sc.prefix.empty())
    throw std::invalid_argument("config: prefix must not be empty");
  for (const char c : sc.prefix) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
      throw std::invalid_argument(
          "config: prefix may contain only [A-Za-z0-9_-]");
  }
  return sc;
}

}  // namespace

ScenarioConfig load_scenario_config(const std::string& path) {
  return scenario_from_parsed(parse_config_file(path));
}

ScenarioConfig scenario_config_from_text(const std::string& text) {
  return scenario_from_parsed(parse_config_text(text));
}

}  // namespace vlx
