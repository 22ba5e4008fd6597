#include "vortexlens.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "context.hpp"
#include "decomposition.hpp"
#include "emittance.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "field_packet.hpp"
#include "free_packet.hpp"
#include "landau.hpp"
#include "presets.hpp"
#include "validity.hpp"
#include "wavefunction.hpp"

struct vlx_packet {
  bool in_field = false;
  vlx::QuantumNumbers qn;
  // free kind
  vlx::WaistSpec waist;
  // field kind
  vlx::FieldContext ctx;
  vlx::FieldInitialConditions ic;
  vlx::OscillationParams osc;
};

struct vlx_decomposition {
  vlx::QuantumNumbers qn;
  vlx::FieldContext ctx;
  vlx::FieldInitialConditions ic;
  vlx::DecompositionResult result;
};

namespace {

thread_local std::string t_error;

int set_error(int code, const std::string& message) {
  t_error = message;
  return code;
}

/// Runs the body and maps exceptions onto the C error codes.
template <class Fn>
int guarded(Fn&& body) {
  try {
    return body();
  } catch (const vlx::convergence_error& e) {
    return set_error(VLX_ERR_CONVERGENCE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(VLX_ERR_INVALID, "out of memory");
  } catch (const std::exception& e) {
    return set_error(VLX_ERR_INVALID, e.what());
  } catch (...) {
    return set_error(VLX_ERR_INVALID, "unknown error");
  }
}

int null_arg(const char* name) {
  return set_error(VLX_ERR_INVALID, std::string("null pointer argument: ") + name);
}

/// Copies src into a fixed buffer, rejecting truncation.
int copy_string(const std::string& src, char* buf, size_t buf_len) {
  if (buf == nullptr) return null_arg("buf");
  if (src.size() + 1 > buf_len) {
    return set_error(VLX_ERR_INVALID,
                     "buffer too small: need " + std::to_string(src.size() + 1) +
                         " bytes, got " + std::to_string(buf_len));
  }
  std::memcpy(buf, src.c_str(), src.size() + 1);
  return VLX_OK;
}

vlx::OpticalState eval_state(const vlx_packet& p, double t_ct) {
  if (p.in_field) return vlx::field_optics(p.qn, p.osc, t_ct);
  return vlx::free_optics(p.qn, p.waist, t_ct);
}

int fill_validity(const vlx::ValidityReport& report, vlx_validity_entry* entries,
                  int cap, int* count) {
  if (count == nullptr) return null_arg("count");
  *count = static_cast<int>(report.entries.size());
  if (cap > 0 && entries == nullptr) return null_arg("entries");
  const int n_fill = cap < *count ? cap : *count;
  for (int i = 0; i < n_fill; ++i) {
    const vlx::ValidityEntry& e = report.entries[static_cast<size_t>(i)];
    vlx_validity_entry& out = entries[i];
    std::memset(out.condition, 0, sizeof(out.condition));
    const size_t n_copy = e.condition.size() < sizeof(out.condition) - 1
                              ? e.condition.size()
                              : sizeof(out.condition) - 1;
    std::memcpy(out.condition, e.condition.c_str(), n_copy);
    out.lhs = e.lhs;
    out.rhs = e.rhs;
    out.margin = e.margin;
    out.nonrelativistic = e.nonrelativistic ? 1 : 0;
  }
  return VLX_OK;
}

}  // namespace

extern "C" {

const char* vlx_version(void) { return vlx::library_version(); }

const char* vlx_last_error(void) { return t_error.c_str(); }

int vlx_field_scales_get(double h_tesla, int n, int l, vlx_field_scales* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    const vlx::FieldContext ctx = vlx::field_context(h_tesla);
    const vlx::LandauMode mode = vlx::landau_mode(qn, ctx);
    out->sigma_L_nm = ctx.sigma_L;
    out->rho_L_nm = mode.rho_L;
    out->omega_rad_per_ns = ctx.omega_rad_per_ns();
    out->Tc_ns = ctx.Tc_ns();
    out->mu_B_H_keV = vlx::consts::energy_to_keV(ctx.mu_B_H());
    out->E_L_keV = vlx::consts::energy_to_keV(mode.E_L);
    return VLX_OK;
  });
}

int vlx_beta(double e_parallel_keV, double* beta_out) {
  if (beta_out == nullptr) return null_arg("beta_out");
  return guarded([&] {
    *beta_out = vlx::kinetic_energy_to_beta(e_parallel_keV);
    return VLX_OK;
  });
}

int vlx_free_packet_create(double sigma_w_nm, double t_g_ns, int n, int l,
                           vlx_packet** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<vlx_packet>();
    p->in_field = false;
    p->qn = vlx::QuantumNumbers{n, l};
    vlx::validate_quantum_numbers(p->qn);
    p->waist = vlx::WaistSpec{sigma_w_nm, vlx::consts::ns_to_ct(t_g_ns)};
    vlx::validate_waist(p->waist);
    *out = p.release();
    return VLX_OK;
  });
}

int vlx_field_packet_create(double h_tesla, int n, int l, double sigma0_nm,
                            double sigma0_prime, double t0_ns, double phi0_rad,
                            vlx_packet** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<vlx_packet>();
    p->in_field = true;
    p->qn = vlx::QuantumNumbers{n, l};
    vlx::validate_quantum_numbers(p->qn);
    p->ctx = vlx::field_context(h_tesla);
    p->ic = vlx::FieldInitialConditions{sigma0_nm, sigma0_prime,
                                        vlx::consts::ns_to_ct(t0_ns), phi0_rad};
    vlx::validate_field_ic(p->ic);
    p->osc = vlx::oscillation_params(p->ctx, p->ic);
    *out = p.release();
    return VLX_OK;
  });
}

void vlx_packet_destroy(vlx_packet* p) { delete p; }

int vlx_packet_eval(const vlx_packet* p, double t_ns, vlx_optics* out) {
  if (p == nullptr) return null_arg("p");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const vlx::OpticalState st = eval_state(*p, vlx::consts::ns_to_ct(t_ns));
    out->sigma_nm = st.sigma;
    out->sigma_prime = st.sigma_prime;
    out->rho_nm = st.sigma * std::sqrt(static_cast<double>(p->qn.N()));
    out->phi_G_rad = st.phi_G;
    return VLX_OK;
  });
}

int vlx_packet_energy_keV(const vlx_packet* p, double* out) {
  if (p == nullptr) return null_arg("p");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const double e = p->in_field ? vlx::field_energy(p->ctx, p->qn, p->osc)
                                 : vlx::free_energy(p->qn, p->waist);
    *out = vlx::consts::energy_to_keV(e);
    return VLX_OK;
  });
}

int vlx_packet_amplitude(const vlx_packet* p, double t_ns, double rho_nm,
                         double phi_rad, double* re, double* im) {
  if (p == nullptr) return null_arg("p");
  if (re == nullptr) return null_arg("re");
  if (im == nullptr) return null_arg("im");
  return guarded([&] {
    const vlx::OpticalState st = eval_state(*p, vlx::consts::ns_to_ct(t_ns));
    const std::complex<double> a = vlx::nslg_amplitude(p->qn, st, rho_nm, phi_rad);
    *re = a.real();
    *im = a.imag();
    return VLX_OK;
  });
}

int vlx_packet_ring_count(const vlx_packet* p, double t_ns, int* rings) {
  if (p == nullptr) return null_arg("p");
  if (rings == nullptr) return null_arg("rings");
  return guarded([&] {
    const vlx::OpticalState st = eval_state(*p, vlx::consts::ns_to_ct(t_ns));
    *rings = vlx::density_ring_count(p->qn, st);
    return VLX_OK;
  });
}

int vlx_packet_oscillation(const vlx_packet* p, vlx_oscillation* out) {
  if (p == nullptr) return null_arg("p");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    if (!p->in_field)
      return set_error(VLX_ERR_INVALID,
                       "oscillation parameters exist only for in-field packets");
    const vlx::OscillationParams& o = p->osc;
    const vlx::ComparisonMetrics m = vlx::comparison_metrics(p->ctx, p->ic);
    out->sigma_st_nm = o.sigma_st();
    out->amplitude_ratio = o.A;
    out->theta_rad = o.theta;
    out->s = o.s;
    out->sigma_min_nm = std::sqrt(o.sigma_min_sq());
    out->sigma_max_nm = std::sqrt(o.sigma_max_sq());
    out->Tc_ns = p->ctx.Tc_ns();
    out->xi_1 = m.xi1;
    out->xi_2 = m.xi2;
    out->zeta = m.zeta;
    out->delta_zeta = m.delta_zeta;
    return VLX_OK;
  });
}

int vlx_packet_regime(const vlx_packet* p, char* buf, size_t buf_len) {
  if (p == nullptr) return null_arg("p");
  return guarded([&] {
    if (!p->in_field)
      return set_error(VLX_ERR_INVALID, "regime exists only for in-field packets");
    return copy_string(vlx::regime_name(vlx::classify_regime(p->osc)), buf, buf_len);
  });
}

int vlx_packet_emittance(const vlx_packet* p, double t_ns, vlx_emittance* out) {
  if (p == nullptr) return null_arg("p");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const double eps = p->in_field
                           ? vlx::emittance_field(p->qn, p->osc, p->ctx,
                                                  vlx::consts::ns_to_ct(t_ns))
                           : vlx::emittance_free(p->qn);
    out->eps_total_nm = eps;
    out->eps_total_lambdaC = vlx::EmittanceSeries::in_lambda_C(eps);
    out->eps_per_axis_nm = vlx::EmittanceSeries::per_axis(eps);
    return VLX_OK;
  });
}

int vlx_emittance_references(int n, int l, double* eps_f_nm, double* eps_L_nm) {
  if (eps_f_nm == nullptr) return null_arg("eps_f_nm");
  if (eps_L_nm == nullptr) return null_arg("eps_L_nm");
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    *eps_f_nm = vlx::emittance_free(qn);
    *eps_L_nm = vlx::emittance_landau(qn);
    return VLX_OK;
  });
}

int vlx_classicality_window(int n, int l, int* nonempty, double* lower,
                            double* upper) {
  if (nonempty == nullptr) return null_arg("nonempty");
  if (lower == nullptr) return null_arg("lower");
  if (upper == nullptr) return null_arg("upper");
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    const vlx::ClassicalityWindow w = vlx::classicality_window(qn);
    *nonempty = w.nonempty ? 1 : 0;
    *lower = w.lower;
    *upper = w.upper;
    return VLX_OK;
  });
}

int vlx_decompose(const vlx_packet* field_packet, double tail_tolerance,
                  vlx_decomposition** out) {
  if (field_packet == nullptr) return null_arg("field_packet");
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (!field_packet->in_field)
      return set_error(VLX_ERR_INVALID,
                       "decomposition requires an in-field packet");
    auto d = std::make_unique<vlx_decomposition>();
    d->qn = field_packet->qn;
    d->ctx = field_packet->ctx;
    d->ic = field_packet->ic;
    d->result = vlx::landau_coefficients(d->qn, d->ic, d->ctx, tail_tolerance);
    *out = d.release();
    return VLX_OK;
  });
}

void vlx_decomposition_destroy(vlx_decomposition* d) { delete d; }

int vlx_decomposition_size(const vlx_decomposition* d, int* count) {
  if (d == nullptr) return null_arg("d");
  if (count == nullptr) return null_arg("count");
  *count = static_cast<int>(d->result.coefficients.size());
  return VLX_OK;
}

int vlx_decomposition_stats(const vlx_decomposition* d, double* zeta,
                            double* tail, int* truncation_n_max) {
  if (d == nullptr) return null_arg("d");
  if (zeta == nullptr) return null_arg("zeta");
  if (tail == nullptr) return null_arg("tail");
  if (truncation_n_max == nullptr) return null_arg("truncation_n_max");
  *zeta = d->result.zeta;
  *tail = d->result.tail;
  *truncation_n_max = d->result.truncation_n_max;
  return VLX_OK;
}

int vlx_decomposition_coefficient(const vlx_decomposition* d, int n_prime,
                                  double* re, double* im) {
  if (d == nullptr) return null_arg("d");
  if (re == nullptr) return null_arg("re");
  if (im == nullptr) return null_arg("im");
  if (n_prime < 0 || static_cast<size_t>(n_prime) >= d->result.coefficients.size())
    return set_error(VLX_ERR_INVALID,
                     "coefficient index out of range: " + std::to_string(n_prime));
  const std::complex<double> a = d->result.coefficients[static_cast<size_t>(n_prime)];
  *re = a.real();
  *im = a.imag();
  return VLX_OK;
}

int vlx_decomposition_oracle(const vlx_packet* field_packet, int n_prime,
                             double* re, double* im) {
  if (field_packet == nullptr) return null_arg("field_packet");
  if (re == nullptr) return null_arg("re");
  if (im == nullptr) return null_arg("im");
  return guarded([&] {
    if (!field_packet->in_field)
      return set_error(VLX_ERR_INVALID,
                       "decomposition requires an in-field packet");
    if (n_prime < 0)
      return set_error(VLX_ERR_INVALID, "n_prime must be >= 0");
    const std::complex<double> a = vlx::landau_coefficient_oracle(
        field_packet->qn, n_prime, field_packet->ctx, field_packet->ic);
    *re = a.real();
    *im = a.imag();
    return VLX_OK;
  });
}

int vlx_off_axis(int n, int l, double alpha_rad, double mean_p_z_inv_nm,
                 double sigma_t0_nm, vlx_off_axis_entry* entries, int cap,
                 int* count) {
  if (count == nullptr) return null_arg("count");
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    const vlx::OffAxisParams params{alpha_rad, mean_p_z_inv_nm, sigma_t0_nm};
    const std::vector<vlx::OffAxisCoupling> all =
        vlx::off_axis_couplings(qn, params);
    *count = static_cast<int>(all.size());
    if (cap > 0 && entries == nullptr) return null_arg("entries");
    const int n_fill = cap < *count ? cap : *count;
    for (int i = 0; i < n_fill; ++i) {
      entries[i].n_prime = all[static_cast<size_t>(i)].n_prime;
      entries[i].l_prime = all[static_cast<size_t>(i)].l_prime;
      entries[i].magnitude = all[static_cast<size_t>(i)].magnitude;
    }
    return VLX_OK;
  });
}

int vlx_validity_free(int n, int l, double rho_w_nm, double threshold,
                      vlx_validity_entry* entries, int cap, int* count) {
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    return fill_validity(vlx::validity_free(qn, rho_w_nm, threshold), entries,
                         cap, count);
  });
}

int vlx_validity_landau(int n, int l, double h_tesla, double threshold,
                        vlx_validity_entry* entries, int cap, int* count) {
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    const vlx::FieldContext ctx = vlx::field_context(h_tesla);
    return fill_validity(vlx::validity_landau(qn, ctx, threshold), entries, cap,
                         count);
  });
}

int vlx_validity_field(int n, int l, double h_tesla, double sigma0_nm,
                       double sigma0_prime, double threshold,
                       vlx_validity_entry* entries, int cap, int* count) {
  return guarded([&] {
    const vlx::QuantumNumbers qn{n, l};
    vlx::validate_quantum_numbers(qn);
    const vlx::FieldContext ctx = vlx::field_context(h_tesla);
    const vlx::FieldInitialConditions ic{sigma0_nm, sigma0_prime, 0.0, 0.0};
    vlx::validate_field_ic(ic);
    return fill_validity(vlx::validity_field(qn, ctx, ic, threshold), entries,
                         cap, count);
  });
}

int vlx_run_figure(const char* figure_id, const char* out_dir, int as_json) {
  if (figure_id == nullptr) return null_arg("figure_id");
  return guarded([&] {
    vlx::write_figure(figure_id, out_dir == nullptr ? "" : out_dir,
                      as_json != 0);
    return VLX_OK;
  });
}

int vlx_run_scenario(const char* config_path, const char* out_dir, int as_json) {
  if (config_path == nullptr) return null_arg("config_path");
  return guarded([&] {
    const vlx::ScenarioConfig cfg = vlx::load_scenario_config(config_path);
    vlx::write_scenario(cfg, out_dir == nullptr ? "" : out_dir, as_json != 0);
    return VLX_OK;
  });
}

int vlx_run_decompose_preset(const char* preset_id, double tail_tolerance,
                             const char* out_dir, int as_json) {
  if (preset_id == nullptr) return null_arg("preset_id");
  return guarded([&] {
    const vlx::Preset* preset = vlx::find_preset(preset_id);
    if (preset == nullptr)
      return set_error(VLX_ERR_INVALID,
                       std::string("unknown preset id: ") + preset_id);
    if (preset->kind != vlx::PresetKind::field_entry)
      return set_error(VLX_ERR_INVALID,
                       std::string("preset does not define a boundary state: ") +
                           preset_id);
    const vlx::FieldContext ctx = vlx::field_context(preset->H_tesla);
    const vlx::FieldInitialConditions ic{
        preset->sigma0_nm, preset->sigma0_prime,
        vlx::consts::ns_to_ct(preset->t0_ns), preset->phi0};
    const std::string name = preset->id + "_landau";
    const vlx::SeriesDoc doc =
        vlx::decompose_doc(preset->qn, ctx, ic, tail_tolerance, name);
    vlx::write_docs({doc}, name, out_dir == nullptr ? "" : out_dir,
                    as_json != 0);
    return VLX_OK;
  });
}

int vlx_write_decomposition(const vlx_packet* field_packet,
                            double tail_tolerance, const char* name,
                            const char* out_dir, int as_json) {
  if (field_packet == nullptr) return null_arg("field_packet");
  if (name == nullptr) return null_arg("name");
  return guarded([&] {
    if (!field_packet->in_field)
      return set_error(VLX_ERR_INVALID,
                       "decomposition requires an in-field packet");
    const vlx::SeriesDoc doc =
        vlx::decompose_doc(field_packet->qn, field_packet->ctx,
                           field_packet->ic, tail_tolerance, name);
    vlx::write_docs({doc}, name, out_dir == nullptr ? "" : out_dir,
                    as_json != 0);
    return VLX_OK;
  });
}

int vlx_preset_ids(char* buf, size_t buf_len) {
  return guarded([&] {
    std::string joined;
    for (const std::string& id : vlx::preset_ids()) {
      if (!joined.empty()) joined += ',';
      joined += id;
    }
    return copy_string(joined, buf, buf_len);
  });
}

}  // extern "C"
