// Command-line front end.  Everything goes through the C API of the shared
// library; no core header is included here.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vortexlens.h"

namespace {

int report_failure(int code) {
  std::fprintf(stderr, "error: %s\n", vlx_last_error());
  return code;
}

#define VLX_TRY(call)                  \
  do {                                 \
    const int rc_ = (call);            \
    if (rc_ != VLX_OK) return report_failure(rc_); \
  } while (0)

struct PacketDeleter {
  void operator()(vlx_packet* p) const { vlx_packet_destroy(p); }
};
using PacketPtr = std::unique_ptr<vlx_packet, PacketDeleter>;

struct DecompositionDeleter {
  void operator()(vlx_decomposition* d) const { vlx_decomposition_destroy(d); }
};
using DecompositionPtr = std::unique_ptr<vlx_decomposition, DecompositionDeleter>;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != stdout) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

/// stdout when path is empty.
FilePtr open_output(const std::string& path) {
  if (path.empty()) return FilePtr(stdout);
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
  return FilePtr(f);
}

// ---------------------------------------------------------------- commands

struct CtxArgs {
  double h_tesla = 0.0;
  int n = 0;
  int l = 0;
};

int run_ctx(const CtxArgs& a) {
  vlx_field_scales s{};
  VLX_TRY(vlx_field_scales_get(a.h_tesla, a.n, a.l, &s));
  std::printf("H_tesla          %.6g\n", a.h_tesla);
  std::printf("n, l             %d, %d\n", a.n, a.l);
  std::printf("sigma_L_nm       %.10g\n", s.sigma_L_nm);
  std::printf("rho_L_nm         %.10g\n", s.rho_L_nm);
  std::printf("omega_rad_per_ns %.10g\n", s.omega_rad_per_ns);
  std::printf("Tc_ns            %.10g\n", s.Tc_ns);
  std::printf("mu_B_H_keV       %.10g\n", s.mu_B_H_keV);
  std::printf("E_L_keV          %.10g\n", s.E_L_keV);
  return 0;
}

struct SeriesArgs {
  double t_start_ns = 0.0;
  double t_max_ns = 0.0;
  int samples = 501;
  std::string out;
};

int write_series(const vlx_packet* p, const SeriesArgs& s) {
  FilePtr f = open_output(s.out);
  if (!f) return 2;
  std::fprintf(f.get(), "t_ns,sigma_nm,sigma_prime,rho_nm,phi_G_rad\n");
  for (int i = 0; i < s.samples; ++i) {
    const double t = s.t_start_ns +
                     (s.t_max_ns - s.t_start_ns) * i / (s.samples - 1);
    vlx_optics o{};
    VLX_TRY(vlx_packet_eval(p, t, &o));
    std::fprintf(f.get(), "%.16e,%.16e,%.16e,%.16e,%.16e\n", t, o.sigma_nm,
                 o.sigma_prime, o.rho_nm, o.phi_G_rad);
  }
  return 0;
}

struct FreeArgs {
  double sigma_w_nm = 0.0;
  double t_g_ns = 0.0;
  int n = 0;
  int l = 0;
  SeriesArgs series;
};

int run_free(const FreeArgs& a) {
  vlx_packet* raw = nullptr;
  VLX_TRY(vlx_free_packet_create(a.sigma_w_nm, a.t_g_ns, a.n, a.l, &raw));
  PacketPtr p(raw);
  double e_keV = 0.0;
  VLX_TRY(vlx_packet_energy_keV(p.get(), &e_keV));
  std::fprintf(stderr, "mean transverse energy: %.10g keV\n", e_keV);
  SeriesArgs s = a.series;
  s.t_start_ns = a.t_g_ns;
  s.t_max_ns = a.t_g_ns + a.series.t_max_ns;
  return write_series(p.get(), s);
}

struct FieldArgs {
  double h_tesla = 0.0;
  int n = 0;
  int l = 0;
  double sigma0_nm = 0.0;
  double sigma0_prime = 0.0;
  double t0_ns = 0.0;
  double phi0_rad = 0.0;
  SeriesArgs series;
  bool summary_only = false;
};

int print_field_summary(const vlx_packet* p) {
  vlx_oscillation o{};
  VLX_TRY(vlx_packet_oscillation(p, &o));
  char regime[32] = {0};
  VLX_TRY(vlx_packet_regime(p, regime, sizeof(regime)));
  double e_keV = 0.0;
  VLX_TRY(vlx_packet_energy_keV(p, &e_keV));
  std::fprintf(stderr, "sigma_st_nm     %.10g\n", o.sigma_st_nm);
  std::fprintf(stderr, "amplitude_ratio %.10g\n", o.amplitude_ratio);
  std::fprintf(stderr, "theta_rad       %.10g\n", o.theta_rad);
  std::fprintf(stderr, "s               %d\n", o.s);
  std::fprintf(stderr, "sigma_min_nm    %.10g\n", o.sigma_min_nm);
  std::fprintf(stderr, "sigma_max_nm    %.10g\n", o.sigma_max_nm);
  std::fprintf(stderr, "Tc_ns           %.10g\n", o.Tc_ns);
  std::fprintf(stderr, "xi_1            %.10g\n", o.xi_1);
  std::fprintf(stderr, "xi_2            %.10g\n", o.xi_2);
  std::fprintf(stderr, "zeta            %.10g\n", o.zeta);
  std::fprintf(stderr, "delta_zeta      %.10g\n", o.delta_zeta);
  std::fprintf(stderr, "regime          %s\n", regime);
  std::fprintf(stderr, "energy_keV      %.10g\n", e_keV);
  return 0;
}

int run_field(const FieldArgs& a) {
  vlx_packet* raw = nullptr;
  VLX_TRY(vlx_field_packet_create(a.h_tesla, a.n, a.l, a.sigma0_nm,
                                  a.sigma0_prime, a.t0_ns, a.phi0_rad, &raw));
  PacketPtr p(raw);
  const int rc = print_field_summary(p.get());
  if (rc != 0 || a.summary_only || a.series.t_max_ns <= 0.0) return rc;
  SeriesArgs s = a.series;
  s.t_start_ns = a.t0_ns;
  s.t_max_ns = a.t0_ns + a.series.t_max_ns;
  return write_series(p.get(), s);
}

struct DecomposeArgs {
  std::string preset;
  FieldArgs field;
  double tail_tol = 1e-10;
  std::string out_dir;
  std::string name = "decomposition";
  bool as_json = false;
  int top = 8;
  bool write_files = false;
};

int run_decompose(const DecomposeArgs& a) {
  if (!a.preset.empty()) {
    VLX_TRY(vlx_run_decompose_preset(a.preset.c_str(), a.tail_tol,
                                     a.out_dir.c_str(), a.as_json ? 1 : 0));
    std::fprintf(stderr, "wrote decomposition of preset %s\n", a.preset.c_str());
    return 0;
  }
  vlx_packet* raw = nullptr;
  VLX_TRY(vlx_field_packet_create(a.field.h_tesla, a.field.n, a.field.l,
                                  a.field.sigma0_nm, a.field.sigma0_prime,
                                  a.field.t0_ns, a.field.phi0_rad, &raw));
  PacketPtr p(raw);
  vlx_decomposition* draw = nullptr;
  VLX_TRY(vlx_decompose(p.get(), a.tail_tol, &draw));
  DecompositionPtr d(draw);
  int count = 0;
  double zeta = 0.0, tail = 0.0;
  int n_max = 0;
  VLX_TRY(vlx_decomposition_size(d.get(), &count));
  VLX_TRY(vlx_decomposition_stats(d.get(), &zeta, &tail, &n_max));
  std::printf("modes %d  zeta %.10g  tail %.3e\n", count, zeta, tail);
  std::printf("n_prime,abs_a_sq\n");
  const int n_show = a.top < count ? a.top : count;
  for (int i = 0; i < n_show; ++i) {
    double re = 0.0, im = 0.0;
    VLX_TRY(vlx_decomposition_coefficient(d.get(), i, &re, &im));
    std::printf("%d,%.16e\n", i, re * re + im * im);
  }
  if (a.write_files) {
    VLX_TRY(vlx_write_decomposition(p.get(), a.tail_tol, a.name.c_str(),
                                    a.out_dir.c_str(), a.as_json ? 1 : 0));
    std::fprintf(stderr, "wrote decomposition files (%s)\n", a.name.c_str());
  }
  return 0;
}

struct EmittanceArgs {
  FieldArgs field;
  double t_max_ns = 0.0;
  int samples = 501;
  std::string out;
};

int run_emittance(const EmittanceArgs& a) {
  double eps_f = 0.0, eps_L = 0.0;
  VLX_TRY(vlx_emittance_references(a.field.n, a.field.l, &eps_f, &eps_L));
  int nonempty = 0;
  double lower = 0.0, upper = 0.0;
  VLX_TRY(vlx_classicality_window(a.field.n, a.field.l, &nonempty, &lower, &upper));
  std::fprintf(stderr, "eps_free_nm    %.10g\n", eps_f);
  std::fprintf(stderr, "eps_landau_nm  %.10g\n", eps_L);
  if (nonempty != 0)
    std::fprintf(stderr, "window         (%.10g, %.10g)\n", lower, upper);
  else
    std::fprintf(stderr, "window         empty\n");
  vlx_packet* raw = nullptr;
  VLX_TRY(vlx_field_packet_create(a.field.h_tesla, a.field.n, a.field.l,
                                  a.field.sigma0_nm, a.field.sigma0_prime,
                                  a.field.t0_ns, a.field.phi0_rad, &raw));
  PacketPtr p(raw);
  FilePtr f = open_output(a.out);
  if (!f) return 2;
  std::fprintf(f.get(), "t_ns,eps_H_nm,eps_H_lambdaC,eps_per_axis_nm\n");
  for (int i = 0; i < a.samples; ++i) {
    const double t = a.field.t0_ns + a.t_max_ns * i / (a.samples - 1);
    vlx_emittance e{};
    VLX_TRY(vlx_packet_emittance(p.get(), t, &e));
    std::fprintf(f.get(), "%.16e,%.16e,%.16e,%.16e\n", t, e.eps_total_nm,
                 e.eps_total_lambdaC, e.eps_per_axis_nm);
  }
  return 0;
}

struct OffAxisArgs {
  int n = 0;
  int l = 0;
  double alpha_rad = 0.0;
  double pz_inv_nm = 0.0;
  double sigma_nm = 0.0;
};

int run_offaxis(const OffAxisArgs& a) {
  int count = 0;
  VLX_TRY(vlx_off_axis(a.n, a.l, a.alpha_rad, a.pz_inv_nm, a.sigma_nm, nullptr,
                       0, &count));
  std::vector<vlx_off_axis_entry> entries(static_cast<size_t>(count));
  VLX_TRY(vlx_off_axis(a.n, a.l, a.alpha_rad, a.pz_inv_nm, a.sigma_nm,
                       entries.data(), count, &count));
  std::printf("n_prime,l_prime,magnitude\n");
  double sum_sq = 0.0;
  for (const vlx_off_axis_entry& e : entries) {
    std::printf("%d,%d,%.16e\n", e.n_prime, e.l_prime, e.magnitude);
    sum_sq += e.magnitude * e.magnitude;
  }
  std::fprintf(stderr, "sum of squares: %.16g\n", sum_sq);
  return 0;
}

struct ValidateArgs {
  int n = 0;
  int l = 0;
  double threshold = 10.0;
  double rho_w_nm = 0.0;
  double h_tesla = 0.0;
  double sigma0_nm = 0.0;
  double sigma0_prime = 0.0;
  bool has_rho_w = false;
  bool has_field = false;
  bool has_sigma0 = false;
};

int print_validity(const vlx_validity_entry* entries, int count) {
  for (int i = 0; i < count; ++i) {
    std::printf("%-20s lhs %.6g  rhs %.6g  margin %.6g  %s\n",
                entries[i].condition, entries[i].lhs, entries[i].rhs,
                entries[i].margin,
                entries[i].nonrelativistic != 0 ? "ok" : "marginal");
  }
  return 0;
}

int run_validate(const ValidateArgs& a) {
  vlx_validity_entry entries[8];
  bool any = false;
  if (a.has_rho_w) {
    int count = 0;
    VLX_TRY(vlx_validity_free(a.n, a.l, a.rho_w_nm, a.threshold, entries, 8,
                              &count));
    print_validity(entries, count);
    any = true;
  }
  if (a.has_field) {
    int count = 0;
    VLX_TRY(vlx_validity_landau(a.n, a.l, a.h_tesla, a.threshold, entries, 8,
                                &count));
    print_validity(entries, count);
    any = true;
    if (a.has_sigma0) {
      VLX_TRY(vlx_validity_field(a.n, a.l, a.h_tesla, a.sigma0_nm,
                                 a.sigma0_prime, a.threshold, entries, 8,
                                 &count));
      print_validity(entries, count);
    }
  }
  if (!any) {
    std::fprintf(stderr,
                 "error: pass --rho-w-nm and/or --field-tesla "
                 "(optionally with --sigma0-nm)\n");
    return 2;
  }
  return 0;
}

struct FigureArgs {
  std::string id;
  std::string out_dir;
  bool as_json = false;
};

int run_figure(const FigureArgs& a) {
  // Kept in sync with the library's figure table; "all" loops over it.
  static const char* known[] = {"2", "3", "4", "5", "6", "8", "B1"};
  if (a.id == "all") {
    for (const char* id : known) {
      VLX_TRY(vlx_run_figure(id, a.out_dir.c_str(), a.as_json ? 1 : 0));
      std::fprintf(stderr, "wrote figure %s\n", id);
    }
    return 0;
  }
  VLX_TRY(vlx_run_figure(a.id.c_str(), a.out_dir.c_str(), a.as_json ? 1 : 0));
  std::fprintf(stderr, "wrote figure %s\n", a.id.c_str());
  return 0;
}

struct ScenarioArgs {
  std::string config;
  std::string out_dir;
  bool as_json = false;
};

int run_scenario(const ScenarioArgs& a) {
  VLX_TRY(vlx_run_scenario(a.config.c_str(), a.out_dir.c_str(),
                           a.as_json ? 1 : 0));
  std::fprintf(stderr, "wrote scenario outputs from %s\n", a.config.c_str());
  return 0;
}

int run_presets() {
  char buf[8192] = {0};
  VLX_TRY(vlx_preset_ids(buf, sizeof(buf)));
  for (char* s = buf; *s != '\0'; ++s) {
    std::putchar(*s == ',' ? '\n' : *s);
  }
  std::putchar('\n');
  return 0;
}

void add_field_state_options(CLI::App* cmd, FieldArgs& a, bool required) {
  auto* h = cmd->add_option("--field-tesla", a.h_tesla, "field strength, T");
  auto* s = cmd->add_option("--sigma0-nm", a.sigma0_nm,
                            "dispersion at the boundary, nm");
  cmd->add_option("--n", a.n, "radial quantum number");
  cmd->add_option("--l", a.l, "orbital angular momentum");
  cmd->add_option("--sigma0-prime", a.sigma0_prime,
                  "dispersion rate d(sigma)/d(ct) at the boundary");
  cmd->add_option("--t0-ns", a.t0_ns, "boundary-crossing instant, ns");
  cmd->add_option("--phi0-rad", a.phi0_rad, "Gouy phase at the boundary, rad");
  if (required) {
    h->required();
    s->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonstationary vortex-packet dynamics across a field boundary"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(vlx_version()); });

  CtxArgs ctx_args;
  auto* c_ctx = app.add_subcommand("ctx", "Field scales for one mode");
  c_ctx->add_option("--field-tesla", ctx_args.h_tesla, "field strength, T")
      ->required();
  c_ctx->add_option("--n", ctx_args.n, "radial quantum number");
  c_ctx->add_option("--l", ctx_args.l, "orbital angular momentum");

  FreeArgs free_args;
  auto* c_free = app.add_subcommand("free", "Free-space dispersion series");
  c_free->add_option("--sigma-w-nm", free_args.sigma_w_nm, "waist dispersion, nm")
      ->required();
  c_free->add_option("--t-g-ns", free_args.t_g_ns, "waist instant, ns");
  c_free->add_option("--n", free_args.n, "radial quantum number");
  c_free->add_option("--l", free_args.l, "orbital angular momentum");
  c_free->add_option("--t-max-ns", free_args.series.t_max_ns,
                     "span past the waist, ns")
      ->required();
  c_free->add_option("--samples", free_args.series.samples, "grid size");
  c_free->add_option("--out", free_args.series.out, "CSV path (default stdout)");

  FieldArgs field_args;
  auto* c_field = app.add_subcommand("field", "In-field dispersion series");
  add_field_state_options(c_field, field_args, true);
  c_field->add_option("--t-max-ns", field_args.series.t_max_ns,
                      "span past the boundary, ns");
  c_field->add_option("--samples", field_args.series.samples, "grid size");
  c_field->add_option("--out", field_args.series.out, "CSV path (default stdout)");
  c_field->add_flag("--summary-only", field_args.summary_only,
                    "print the oscillation summary and stop");

  DecomposeArgs dec_args;
  auto* c_dec = app.add_subcommand("decompose",
                                   "Stationary-basis weights of a packet");
  c_dec->add_option("--preset", dec_args.preset, "preset id (see `presets`)");
  add_field_state_options(c_dec, dec_args.field, false);
  c_dec->add_option("--tail-tol", dec_args.tail_tol,
                    "stop once the missing weight drops below this");
  c_dec->add_option("--out-dir", dec_args.out_dir, "output directory");
  c_dec->add_option("--name", dec_args.name, "output file stem");
  c_dec->add_flag("--json", dec_args.as_json, "single JSON document output");
  c_dec->add_option("--top", dec_args.top, "weights to print");
  c_dec->add_flag("--write", dec_args.write_files, "also write output files");

  EmittanceArgs emit_args;
  auto* c_emit = app.add_subcommand("emittance", "Emittance history of a packet");
  add_field_state_options(c_emit, emit_args.field, true);
  c_emit->add_option("--t-max-ns", emit_args.t_max_ns,
                     "span past the boundary, ns")
      ->required();
  c_emit->add_option("--samples", emit_args.samples, "grid size");
  c_emit->add_option("--out", emit_args.out, "CSV path (default stdout)");

  OffAxisArgs off_args;
  auto* c_off = app.add_subcommand("offaxis",
                                   "First-order mixing of a tilted packet");
  c_off->add_option("--n", off_args.n, "radial quantum number");
  c_off->add_option("--l", off_args.l, "orbital angular momentum");
  c_off->add_option("--alpha-rad", off_args.alpha_rad, "tilt angle, rad")
      ->required();
  c_off->add_option("--pz-inv-nm", off_args.pz_inv_nm,
                    "longitudinal momentum, 1/nm")
      ->required();
  c_off->add_option("--sigma-nm", off_args.sigma_nm,
                    "dispersion at the boundary, nm")
      ->required();

  ValidateArgs val_args;
  auto* c_val = app.add_subcommand("validate",
                                   "Nonrelativistic-regime checks");
  c_val->add_option("--n", val_args.n, "radial quantum number");
  c_val->add_option("--l", val_args.l, "orbital angular momentum");
  c_val->add_option("--threshold", val_args.threshold,
                    "headroom factor counting as \"much smaller\"");
  auto* o_rho = c_val->add_option("--rho-w-nm", val_args.rho_w_nm,
                                  "free-packet waist radius, nm");
  auto* o_h = c_val->add_option("--field-tesla", val_args.h_tesla,
                                "field strength, T");
  auto* o_s0 = c_val->add_option("--sigma0-nm", val_args.sigma0_nm,
                                 "dispersion at the boundary, nm");
  c_val->add_option("--sigma0-prime", val_args.sigma0_prime,
                    "dispersion rate at the boundary");

  FigureArgs fig_args;
  auto* c_fig = app.add_subcommand("figure", "Write one reproduction data set");
  c_fig->add_option("--id", fig_args.id, "figure id (2,3,4,5,6,8,B1 or all)")
      ->required();
  c_fig->add_option("--out-dir", fig_args.out_dir, "output directory");
  c_fig->add_flag("--json", fig_args.as_json, "single JSON document output");

  ScenarioArgs scn_args;
  auto* c_scn = app.add_subcommand("scenario", "Run a scenario config file");
  c_scn->add_option("--config", scn_args.config, "config path")->required();
  c_scn->add_option("--out-dir", scn_args.out_dir, "output directory");
  c_scn->add_flag("--json", scn_args.as_json, "single JSON document output");

  auto* c_pre = app.add_subcommand("presets", "List known preset ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  val_args.has_rho_w = o_rho->count() > 0;
  val_args.has_field = o_h->count() > 0;
  val_args.has_sigma0 = o_s0->count() > 0;

  if (c_ctx->parsed()) return run_ctx(ctx_args);
  if (c_free->parsed()) return run_free(free_args);
  if (c_field->parsed()) return run_field(field_args);
  if (c_dec->parsed()) return run_decompose(dec_args);
  if (c_emit->parsed()) return run_emittance(emit_args);
  if (c_off->parsed()) return run_offaxis(off_args);
  if (c_val->parsed()) return run_validate(val_args);
  if (c_fig->parsed()) return run_figure(fig_args);
  if (c_scn->parsed()) return run_scenario(scn_args);
  if (c_pre->parsed()) return run_presets();
  return 2;
}
