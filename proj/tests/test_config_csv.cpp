#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "csvio.hpp"
#include "doctest.h"

using namespace vlx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

/// Expects `fn()` to throw std::invalid_argument mentioning `needle`.
template <typename Fn>
void expect_config_error(Fn&& fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected a parse error mentioning '" << needle << "'");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK_MESSAGE(what.find(needle) != std::string::npos,
                  "'" << what << "' does not mention '" << needle << "'");
  }
}

const char* kScenarioText =
    "# generated packet meeting a solenoid\n"
    "[source]\n"
    "sigma_w_nm = 3.25\n"
    "n = 0\n"
    "l = 3\n"
    "e_parallel_kev = 300\n"
    "[geometry]\n"
    "z_g_mm = 0\n"
    "z_0_mm = 0.5\n"
    "[field]\n"
    "h_tesla = 1.9\n"
    "[output]\n"
    "t_max_ns = 0.0376\n"
    "samples = 400\n";

}  // namespace

TEST_CASE("config parser: sections, comments, trimming") {
  const ParsedConfig cfg = parse_config_text(
      "# leading comment\n"
      "[alpha]\n"
      "  key =  spaced value \n"
      "\r\n"
      "[ beta ]\r\n"
      "x=1\r\n"
      "[empty]\n");
  CHECK(cfg.get("alpha", "key") == "spaced value");
  CHECK(cfg.get("beta", "x") == "1");
  CHECK(cfg.sections.count("empty") == 1);
  CHECK(cfg.has("alpha", "key"));
  CHECK_FALSE(cfg.has("alpha", "missing"));
  CHECK_FALSE(cfg.has("missing", "key"));
  expect_config_error([&] { cfg.get("alpha", "missing"); }, "missing key");
  expect_config_error([&] { cfg.get("nowhere", "key"); }, "missing section");
}

TEST_CASE("config parser: malformed lines carry their line number") {
  expect_config_error([] { parse_config_text("[a]\nkey = 1\n[oops\n"); },
                      "config line 3");
  expect_config_error([] { parse_config_text("[]\n"); }, "empty section name");
  expect_config_error([] { parse_config_text("[a]\nno equals sign\n"); },
                      "key = value");
  expect_config_error([] { parse_config_text("[a]\n= 3\n"); }, "empty key");
  expect_config_error([] { parse_config_text("[a]\nkey =\n"); },
                      "empty value");
  expect_config_error([] { parse_config_text("key = 1\n[a]\n"); },
                      "outside any section");
  expect_config_error([] { parse_config_text("[a]\nk = 1\nk = 2\n"); },
                      "duplicate key 'k'");
  expect_config_error([] { parse_config_file("/nonexistent/path.cfg"); },
                      "cannot open");
}

TEST_CASE("scenario schema: values, defaults, round trip through a file") {
  const ScenarioConfig sc = scenario_config_from_text(kScenarioText);
  CHECK(sc.sigma_w_nm == 3.25);
  CHECK(sc.n == 0);
  CHECK(sc.l == 3);
  CHECK(sc.e_parallel_keV == 300.0);
  CHECK(sc.z_g_mm == 0.0);
  CHECK(sc.z_0_mm == 0.5);
  CHECK(sc.H_tesla == 1.9);
  CHECK(sc.t_max_ns == 0.0376);
  CHECK(sc.samples == 400);
  CHECK(sc.samples_free == 400);  // defaults to samples
  CHECK(sc.prefix == "scenario");

  const std::string path = "test_scenario_roundtrip.cfg";
  write_text_file(path, std::string(kScenarioText) +
                            "samples_free = 64\nprefix = run-01\n");
  const ScenarioConfig sf = load_scenario_config(path);
  CHECK(sf.samples_free == 64);
  CHECK(sf.prefix == "run-01");
  CHECK(sf.sigma_w_nm == sc.sigma_w_nm);
  std::remove(path.c_str());
}

TEST_CASE("scenario schema: rejects unknowns and bad values") {
  auto patched = [](const std::string& from, const std::string& to) {
    std::string t = kScenarioText;
    const std::size_t p = t.find(from);
    REQUIRE(p != std::string::npos);
    t.replace(p, from.size(), to);
    return t;
  };
  expect_config_error(
      [] {
        scenario_config_from_text(std::string(kScenarioText) +
                                  "[extras]\nfoo = 1\n");
      },
      "unknown section [extras]");
  expect_config_error(
      [] {
        scenario_config_from_text(std::string(kScenarioText) + "foo = 1\n");
      },
      "unknown key 'foo'");
  expect_config_error(
      [&] { scenario_config_from_text(patched("samples = 400\n", "")); },
      "missing key 'samples'");
  expect_config_error(
      [&] {
        scenario_config_from_text(patched("sigma_w_nm = 3.25", "sigma_w_nm = x"));
      },
      "not a finite number");
  expect_config_error(
      [&] { scenario_config_from_text(patched("n = 0", "n = 0.5")); },
      "not an integer");
  expect_config_error(
      [&] { scenario_config_from_text(patched("z_0_mm = 0.5", "z_0_mm = -1")); },
      "must not precede the waist");
  expect_config_error(
      [&] {
        scenario_config_from_text(patched("sigma_w_nm = 3.25",
                                          "sigma_w_nm = -2"));
      },
      "sigma_w_nm");
  expect_config_error(
      [&] { scenario_config_from_text(patched("samples = 400", "samples = 1")); },
      "samples must be >= 2");
  expect_config_error(
      [&] {
        scenario_config_from_text(std::string(kScenarioText) +
                                  "prefix = bad/name\n");
      },
      "prefix");
}

TEST_CASE("number formatting round-trips and is locale independent") {
  const double values[] = {0.0,    1.0,     -2.5,    0.1,     1e-300,
                           5e-324, 6.02e23, 1e100,   -7.25e-9};
  for (const double v : values) {
    const std::string s = format_double(v);
    CHECK(s.find('e') != std::string::npos);
    CHECK(s.find(',') == std::string::npos);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(res.ec == std::errc());
    CHECK(back == v);
  }
  CHECK(format_double(1.0) == "1.0000000000000000e+00");
  CHECK(format_double(-2.5) == "-2.5000000000000000e+00");
  // Nearest double to 0.1 needs all 17 significant digits.
  CHECK(format_double(0.1) == "1.0000000000000001e-01");
}

TEST_CASE("csv serialization: exact bytes, strict row width") {
  SeriesDoc doc;
  doc.name = "demo";
  doc.columns = {"a", "b"};
  doc.rows = {{1.0, 0.5}, {-2.5, 0.1}};
  CHECK(doc_to_csv(doc) ==
        "a,b\n"
        "1.0000000000000000e+00,5.0000000000000000e-01\n"
        "-2.5000000000000000e+00,1.0000000000000001e-01\n");

  SeriesDoc bad = doc;
  bad.rows.push_back({3.0});
  CHECK_THROWS_AS(doc_to_csv(bad), std::runtime_error);

  const std::string path = "test_csv_bytes.csv";
  write_csv(path, doc);
  const std::string bytes = slurp(path);
  CHECK(bytes == doc_to_csv(doc));
  CHECK(bytes.find('\r') == std::string::npos);
  std::remove(path.c_str());
}
