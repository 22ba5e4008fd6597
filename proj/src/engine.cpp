#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

#include "emittance.hpp"
#include "field_packet.hpp"
#include "free_packet.hpp"

namespace vlx {

namespace {

constexpr const char* kLibraryVersion = "1.0.0";

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

/// Uniform time grid in ns, both endpoints included.
std::vector<double> time_grid_ns(double t_begin_ns, double t_end_ns,
                                 int samples) {
  std::vector<double> g;
  g.reserve(samples);
  const double dt = (t_end_ns - t_begin_ns) / (samples - 1);
  for (int i = 0; i < samples; ++i) g.push_back(t_begin_ns + i * dt);
  return g;
}

void push_common_meta(SeriesDoc& doc, const Preset& p) {
  doc.meta.push_back(meta_str("library_version", kLibraryVersion));
  doc.meta.push_back(meta_str("preset_table_version", preset_table_version()));
  doc.meta.push_back(meta_str("preset", p.id));
  doc.meta.push_back(meta_str("note", p.note));
  doc.meta.push_back(meta_num("n", p.qn.n));
  doc.meta.push_back(meta_num("l", p.qn.l));
}

void push_field_entry_meta(SeriesDoc& doc, const Preset& p,
                           const FieldContext& ctx,
                           const FieldInitialConditions& ic,
                           const OscillationParams& op) {
  const ComparisonMetrics cm = comparison_metrics(ctx, ic);
  doc.meta.push_back(meta_num("h_tesla", ctx.H_tesla));
  doc.meta.push_back(meta_num("sigma0_nm", ic.sigma0));
  doc.meta.push_back(meta_num("sigma0_prime", ic.sigma0_prime));
  doc.meta.push_back(meta_num("t0_ns", p.t0_ns));
  doc.meta.push_back(meta_num("phi0_rad", ic.phi0));
  doc.meta.push_back(meta_num("sigma_L_nm", ctx.sigma_L));
  doc.meta.push_back(meta_num("sigma_st_nm", op.sigma_st()));
  doc.meta.push_back(meta_num("amplitude_ratio", op.A));
  doc.meta.push_back(meta_num("theta_rad", op.theta));
  doc.meta.push_back(meta_num("s", op.s));
  doc.meta.push_back(meta_num("Tc_ns", ctx.Tc_ns()));
  doc.meta.push_back(meta_num("xi_1", cm.xi1));
  doc.meta.push_back(meta_num("xi_2", cm.xi2));
  doc.meta.push_back(meta_num("zeta", cm.zeta));
  doc.meta.push_back(meta_num("delta_zeta", cm.delta_zeta));
  doc.meta.push_back(
      meta_str("regime", regime_name(classify_regime(op))));
}

FieldInitialConditions preset_entry(const Preset& p) {
  FieldInitialConditions ic;
  ic.sigma0 = p.sigma0_nm;
  ic.sigma0_prime = p.sigma0_prime;
  ic.t0 = consts::ns_to_ct(p.t0_ns);
  ic.phi0 = p.phi0;
  return ic;
}

/// Radius history with the two reference radii alongside.
SeriesDoc field_radius_doc(const Preset& p) {
  const FieldContext ctx = field_context(p.H_tesla);
  const FieldInitialConditions ic = preset_entry(p);
  const OscillationParams op = oscillation_params(ctx, ic);
  const double sqrt_nn = std::sqrt(static_cast<double>(p.qn.N()));
  const double rho_L = ctx.sigma_L * sqrt_nn;
  const double rho_st = op.sigma_st() * sqrt_nn;

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"t_ns", "rho_nm", "rho_L_nm", "rho_st_nm"};
  for (const double t_ns :
       time_grid_ns(p.t0_ns, p.t0_ns + p.t_end_ns, p.samples)) {
    const OpticalState st = field_dispersion(op, consts::ns_to_ct(t_ns));
    doc.rows.push_back({t_ns, st.sigma * sqrt_nn, rho_L, rho_st});
  }
  push_common_meta(doc, p);
  push_field_entry_meta(doc, p, ctx, ic, op);
  doc.meta.push_back(meta_num("rho_L_nm", rho_L));
  doc.meta.push_back(meta_num("rho_st_nm", rho_st));
  return doc;
}

SeriesDoc free_radius_doc(const Preset& p) {
  WaistSpec w;
  w.sigma_w = p.sigma_w_nm;
  w.t_g = consts::ns_to_ct(p.t0_ns);
  validate_waist(w);
  const double sqrt_nn = std::sqrt(static_cast<double>(p.qn.N()));

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"t_ns", "sigma_nm", "rho_nm"};
  for (const double t_ns :
       time_grid_ns(p.t0_ns, p.t0_ns + p.t_end_ns, p.samples)) {
    const OpticalState st = free_dispersion(w, consts::ns_to_ct(t_ns));
    doc.rows.push_back({t_ns, st.sigma, st.sigma * sqrt_nn});
  }
  push_common_meta(doc, p);
  doc.meta.push_back(meta_num("sigma_w_nm", p.sigma_w_nm));
  doc.meta.push_back(meta_num("rho_w_nm", p.sigma_w_nm * sqrt_nn));
  doc.meta.push_back(meta_num("tau_d_ns", consts::ct_to_ns(w.tau_d())));
  doc.meta.push_back(meta_num("e_parallel_keV", p.e_parallel_keV));
  doc.meta.push_back(
      meta_num("beta", kinetic_energy_to_beta(p.e_parallel_keV)));
  doc.meta.push_back(meta_num(
      "mean_energy_keV",
      consts::energy_to_keV(free_energy(p.qn, w))));
  return doc;
}

SeriesDoc gouy_doc(const Preset& p) {
  const FieldContext ctx = field_context(p.H_tesla);
  const FieldInitialConditions ic = preset_entry(p);
  const OscillationParams op = oscillation_params(ctx, ic);

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"t_ns"};
  for (const QuantumNumbers& qn : p.qn_list) {
    doc.columns.push_back("phi_G_n" + std::to_string(qn.n) + "_l" +
                          std::to_string(qn.l) + "_rad");
  }
  for (const double t_ns :
       time_grid_ns(p.t0_ns, p.t0_ns + p.t_end_ns, p.samples)) {
    std::vector<double> row{t_ns};
    for (const QuantumNumbers& qn : p.qn_list)
      row.push_back(field_gouy(qn, op, consts::ns_to_ct(t_ns)));
    doc.rows.push_back(std::move(row));
  }
  push_common_meta(doc, p);
  push_field_entry_meta(doc, p, ctx, ic, op);
  for (const QuantumNumbers& qn : p.qn_list) {
    const double gain =
        (2.0 * qn.n + qn.abs_l() + qn.l + 1.0) * std::numbers::pi;
    doc.meta.push_back(meta_num("gain_per_period_n" + std::to_string(qn.n) +
                                    "_l" + std::to_string(qn.l) + "_rad",
                                gain));
  }
  return doc;
}

SeriesDoc boundary_vs_z_doc(const Preset& p) {
  const FieldContext ctx = field_context(p.H_tesla);
  const FieldInitialConditions ic = preset_entry(p);
  const OscillationParams op = oscillation_params(ctx, ic);
  const double beta = kinetic_energy_to_beta(p.e_parallel_keV);
  const double sqrt_nn = std::sqrt(static_cast<double>(p.qn.N()));

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"z_mm", "t_ns", "sigma_nm", "rho_nm", "sigma_L_nm"};
  for (const double t_ns :
       time_grid_ns(p.t0_ns, p.t0_ns + p.t_end_ns, p.samples)) {
    const double t_ct = consts::ns_to_ct(t_ns);
    const OpticalState st = field_dispersion(op, t_ct);
    const double z_mm = beta * (t_ct - op.t0) * 1e-6;
    doc.rows.push_back({z_mm, t_ns, st.sigma, st.sigma * sqrt_nn, ctx.sigma_L});
  }
  push_common_meta(doc, p);
  push_field_entry_meta(doc, p, ctx, ic, op);
  doc.meta.push_back(meta_num("e_parallel_keV", p.e_parallel_keV));
  doc.meta.push_back(meta_num("beta", beta));
  doc.meta.push_back(
      meta_num("rho_st_nm", op.sigma_st() * sqrt_nn));
  doc.meta.push_back(
      meta_num("z_period_mm", beta * op.period_ct() * 1e-6));
  return doc;
}

SeriesDoc vanishing_field_doc(const Preset& p) {
  WaistSpec w;
  w.sigma_w = p.sigma_w_nm;
  w.t_g = consts::ns_to_ct(p.t0_ns);
  validate_waist(w);
  const double sqrt_nn = std::sqrt(static_cast<double>(p.qn.N()));

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"t_ns"};
  std::vector<OscillationParams> ops;
  for (const double h : p.H_list) {
    doc.columns.push_back("rho_" + fixed2(h) + "T_nm");
    const FieldContext ctx = field_context(h);
    FieldInitialConditions ic;
    ic.sigma0 = p.sigma_w_nm;  // waist sits at the boundary
    ic.sigma0_prime = 0.0;
    ic.t0 = w.t_g;
    ic.phi0 = 0.0;
    ops.push_back(oscillation_params(ctx, ic));
  }
  doc.columns.push_back("rho_free_nm");

  for (const double t_ns :
       time_grid_ns(p.t0_ns, p.t0_ns + p.t_end_ns, p.samples)) {
    const double t_ct = consts::ns_to_ct(t_ns);
    std::vector<double> row{t_ns};
    for (const OscillationParams& op : ops)
      row.push_back(field_dispersion(op, t_ct).sigma * sqrt_nn);
    row.push_back(free_dispersion(w, t_ct).sigma * sqrt_nn);
    doc.rows.push_back(std::move(row));
  }
  push_common_meta(doc, p);
  doc.meta.push_back(meta_num("sigma_w_nm", p.sigma_w_nm));
  doc.meta.push_back(meta_num("tau_d_ns", consts::ct_to_ns(w.tau_d())));
  {
    std::string hs;
    for (std::size_t i = 0; i < p.H_list.size(); ++i) {
      if (i) hs += ',';
      hs += fixed2(p.H_list[i]);
    }
    doc.meta.push_back(meta_str("h_tesla_list", hs));
  }
  return doc;
}

SeriesDoc emittance_doc(const Preset& p) {
  const FieldContext ctx = field_context(p.H_tesla);
  const FieldInitialConditions ic = preset_entry(p);
  const OscillationParams op = oscillation_params(ctx, ic);
  const EmittanceSeries es =
      emittance_series(p.qn, op, ctx, ic.t0,
                       ic.t0 + consts::ns_to_ct(p.t_end_ns), p.samples);

  SeriesDoc doc;
  doc.name = p.id;
  doc.columns = {"t_ns", "eps_H_lambdaC", "eps_f_lambdaC", "eps_L_lambdaC"};
  for (std::size_t i = 0; i < es.t_grid.size(); ++i) {
    doc.rows.push_back({consts::ct_to_ns(es.t_grid[i]),
                        EmittanceSeries::in_lambda_C(es.eps_H[i]),
                        EmittanceSeries::in_lambda_C(es.eps_f),
                        EmittanceSeries::in_lambda_C(es.eps_L)});
  }
  push_common_meta(doc, p);
  push_field_entry_meta(doc, p, ctx, ic, op);
  doc.meta.push_back(meta_num("eps_per_axis_factor", 0.5));
  const ClassicalityWindow win = classicality_window(p.qn);
  doc.meta.push_back(meta_num("window_nonempty", win.nonempty ? 1.0 : 0.0));
  if (win.nonempty) {
    doc.meta.push_back(meta_num("window_lower", win.lower));
    doc.meta.push_back(meta_num("window_upper", win.upper));
  }
  doc.meta.push_back(
      meta_num("dip_below_free", emittance_dip_exists(p.qn, op) ? 1.0 : 0.0));
  return doc;
}

const Preset& need_preset(const std::string& id) {
  const Preset* p = find_preset(id);
  if (!p) throw std::logic_error("preset table is missing entry: " + id);
  return *p;
}

}  // namespace

const char* library_version() { return kLibraryVersion; }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"2", "3", "4", "5",
                                               "6", "8", "B1"};
  return ids;
}

std::vector<SeriesDoc> figure_series(const std::string& figure_id) {
  std::vector<SeriesDoc> docs;
  if (figure_id == "2") {
    docs.push_back(free_radius_doc(need_preset("fig2")));
  } else if (figure_id == "3") {
    for (const char* id : {"fig3a", "fig3b", "fig3c", "fig3d"})
      docs.push_back(field_radius_doc(need_preset(id)));
  } else if (figure_id == "4") {
    for (const char* id : {"fig4_caption", "fig4_text"})
      docs.push_back(gouy_doc(need_preset(id)));
  } else if (figure_id == "5") {
    docs.push_back(boundary_vs_z_doc(need_preset("fig5")));
  } else if (figure_id == "6") {
    docs.push_back(vanishing_field_doc(need_preset("fig6")));
  } else if (figure_id == "8") {
    for (const char* id : {"fig8a", "fig8b"})
      docs.push_back(emittance_doc(need_preset(id)));
  } else if (figure_id == "B1") {
    for (const char* id : {"figB1a", "figB1b", "figB1c", "figB1d"})
      docs.push_back(field_radius_doc(need_preset(id)));
  } else {
    throw std::invalid_argument("unknown figure id: " + figure_id);
  }
  return docs;
}

SeriesDoc decompose_doc(const QuantumNumbers& qn, const FieldContext& ctx,
                        const FieldInitialConditions& ic,
                        double tail_tolerance, const std::string& name) {
  const DecompositionResult res =
      landau_coefficients(qn, ic, ctx, tail_tolerance);

  SeriesDoc doc;
  doc.name = name;
  doc.columns = {"n_prime", "abs_a_sq", "phase_rad"};
  double sum_sq = 0.0;
  for (std::size_t np = 0; np < res.coefficients.size(); ++np) {
    const std::complex<double> a = res.coefficients[np];
    sum_sq += std::norm(a);
    doc.rows.push_back(
        {static_cast<double>(np), std::norm(a), std::arg(a)});
  }
  doc.meta.push_back(meta_str("library_version", kLibraryVersion));
  doc.meta.push_back(meta_str("preset_table_version", preset_table_version()));
  doc.meta.push_back(meta_num("n", qn.n));
  doc.meta.push_back(meta_num("l", qn.l));
  doc.meta.push_back(meta_num("h_tesla", ctx.H_tesla));
  doc.meta.push_back(meta_num("sigma0_nm", ic.sigma0));
  doc.meta.push_back(meta_num("sigma0_prime", ic.sigma0_prime));
  doc.meta.push_back(meta_num("t0_ns", consts::ct_to_ns(ic.t0)));
  doc.meta.push_back(meta_num("phi0_rad", ic.phi0));
  doc.meta.push_back(meta_num("zeta", res.zeta));
  doc.meta.push_back(meta_num("truncation_n_max", res.truncation_n_max));
  doc.meta.push_back(meta_num("tail", res.tail));
  doc.meta.push_back(meta_num("sum_abs_a_sq", sum_sq));
  return doc;
}

std::vector<SeriesDoc> scenario_series(const ScenarioConfig& cfg) {
  const QuantumNumbers qn{cfg.n, cfg.l};
  validate_quantum_numbers(qn);
  const double beta = kinetic_energy_to_beta(cfg.e_parallel_keV);
  const double t_g = cfg.z_g_mm * 1e6 / beta;  // ct-nm
  const double t0 = cfg.z_0_mm * 1e6 / beta;
  WaistSpec w;
  w.sigma_w = cfg.sigma_w_nm;
  w.t_g = t_g;
  validate_waist(w);

  const OpticalState boundary = free_optics(qn, w, t0);
  const FieldContext ctx = field_context(cfg.H_tesla);
  FieldInitialConditions ic;
  ic.sigma0 = boundary.sigma;
  ic.sigma0_prime = boundary.sigma_prime;
  ic.t0 = t0;
  ic.phi0 = boundary.phi_G;
  const OscillationParams op = oscillation_params(ctx, ic);
  const double sqrt_nn = std::sqrt(static_cast<double>(qn.N()));

  const std::vector<std::string> columns = {
      "z_mm", "t_ns", "sigma_nm", "sigma_prime", "rho_nm", "phi_G_rad"};
  std::vector<SeriesDoc> docs;

  if (cfg.z_0_mm > cfg.z_g_mm) {
    SeriesDoc doc;
    doc.name = cfg.prefix + "_free";
    doc.columns = columns;
    const double dt = (t0 - t_g) / (cfg.samples_free - 1);
    for (int i = 0; i < cfg.samples_free; ++i) {
      const double t = t_g + i * dt;
      const OpticalState st = free_optics(qn, w, t);
      doc.rows.push_back({beta * t * 1e-6, consts::ct_to_ns(t), st.sigma,
                          st.sigma_prime, st.sigma * sqrt_nn, st.phi_G});
    }
    doc.meta.push_back(meta_str("segment", "free drift"));
    docs.push_back(std::move(doc));
  }

  {
    SeriesDoc doc;
    doc.name = cfg.prefix + "_field";
    doc.columns = columns;
    const double t_end = t0 + consts::ns_to_ct(cfg.t_max_ns);
    const double dt = (t_end - t0) / (cfg.samples - 1);
    for (int i = 0; i < cfg.samples; ++i) {
      const double t = t0 + i * dt;
      const OpticalState st = field_optics(qn, op, t);
      doc.rows.push_back({beta * t * 1e-6, consts::ct_to_ns(t), st.sigma,
                          st.sigma_prime, st.sigma * sqrt_nn, st.phi_G});
    }
    doc.meta.push_back(meta_str("segment", "inside the solenoid"));
    doc.meta.push_back(meta_str("library_version", kLibraryVersion));
    doc.meta.push_back(meta_num("sigma_w_nm", cfg.sigma_w_nm));
    doc.meta.push_back(meta_num("n", qn.n));
    doc.meta.push_back(meta_num("l", qn.l));
    doc.meta.push_back(meta_num("e_parallel_keV", cfg.e_parallel_keV));
    doc.meta.push_back(meta_num("beta", beta));
    doc.meta.push_back(meta_num("z_g_mm", cfg.z_g_mm));
    doc.meta.push_back(meta_num("z_0_mm", cfg.z_0_mm));
    doc.meta.push_back(meta_num("h_tesla", cfg.H_tesla));
    doc.meta.push_back(meta_num("t0_ns", consts::ct_to_ns(t0)));
    doc.meta.push_back(meta_num("sigma0_nm", ic.sigma0));
    doc.meta.push_back(meta_num("sigma0_prime", ic.sigma0_prime));
    doc.meta.push_back(meta_num("phi0_rad", ic.phi0));
    doc.meta.push_back(meta_num("sigma_L_nm", ctx.sigma_L));
    doc.meta.push_back(meta_num("rho_L_nm", ctx.sigma_L * sqrt_nn));
    doc.meta.push_back(meta_num("sigma_st_nm", op.sigma_st()));
    doc.meta.push_back(meta_num("rho_st_nm", op.sigma_st() * sqrt_nn));
    doc.meta.push_back(meta_num("amplitude_ratio", op.A));
    doc.meta.push_back(meta_num("Tc_ns", ctx.Tc_ns()));
    const ComparisonMetrics cm = comparison_metrics(ctx, ic);
    doc.meta.push_back(meta_num("xi_1", cm.xi1));
    doc.meta.push_back(meta_num("xi_2", cm.xi2));
    doc.meta.push_back(meta_num("zeta", cm.zeta));
    doc.meta.push_back(meta_str("regime", regime_name(classify_regime(op))));
    docs.push_back(std::move(doc));
  }
  return docs;
}

namespace {

nlohmann::ordered_json meta_to_json(const SeriesDoc& doc) {
  nlohmann::ordered_json j;
  for (const MetaItem& m : doc.meta) {
    if (m.is_number)
      j[m.key] = m.num;
    else
      j[m.key] = m.str;
  }
  return j;
}

}  // namespace

std::vector<std::string> write_docs(const std::vector<SeriesDoc>& docs,
                                    const std::string& stem,
                                    const std::string& out_dir, bool as_json) {
  namespace fs = std::filesystem;
  if (!out_dir.empty()) fs::create_directories(out_dir);
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);

  std::vector<std::string> written;
  if (as_json) {
    nlohmann::ordered_json root;
    root["library_version"] = kLibraryVersion;
    root["series"] = nlohmann::ordered_json::array();
    for (const SeriesDoc& doc : docs) {
      nlohmann::ordered_json jd;
      jd["name"] = doc.name;
      jd["metadata"] = meta_to_json(doc);
      jd["columns"] = doc.columns;
      jd["rows"] = doc.rows;
      root["series"].push_back(std::move(jd));
    }
    const fs::path path = dir / (stem + ".json");
    write_text_file(path.string(), root.dump(2) + "\n");
    written.push_back(path.string());
    return written;
  }

  nlohmann::ordered_json meta;
  meta["library_version"] = kLibraryVersion;
  meta["series"] = nlohmann::ordered_json::array();
  for (const SeriesDoc& doc : docs) {
    const fs::path path = dir / (doc.name + ".csv");
    write_csv(path.string(), doc);
    written.push_back(path.string());
    nlohmann::ordered_json jm = meta_to_json(doc);
    jm["name"] = doc.name;
    // keep name first for readability
    nlohmann::ordered_json ordered;
    ordered["name"] = doc.name;
    for (auto it = jm.begin(); it != jm.end(); ++it) {
      if (it.key() != "name") ordered[it.key()] = it.value();
    }
    meta["series"].push_back(std::move(ordered));
  }
  const fs::path meta_path = dir / (stem + "_meta.json");
  write_text_file(meta_path.string(), meta.dump(2) + "\n");
  written.push_back(meta_path.string());
  return written;
}

std::vector<std::string> write_figure(const std::string& figure_id,
                                      const std::string& out_dir,
                                      bool as_json) {
  const std::vector<SeriesDoc> docs = figure_series(figure_id);
  return write_docs(docs, "fig" + figure_id, out_dir, as_json);
}

std::vector<std::string> write_scenario(const ScenarioConfig& cfg,
                                        const std::string& out_dir,
                                        bool as_json) {
  const std::vector<SeriesDoc> docs = scenario_series(cfg);
  return write_docs(docs, cfg.prefix, out_dir, as_json);
}

}  // namespace vlx
