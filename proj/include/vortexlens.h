/* C interface of the vortexlens library.
 *
 * Conventions: every fallible call returns an error code (VLX_OK on
 * success); outputs go through pointers.  Times cross this boundary in
 * nanoseconds, lengths in nanometers, energies in keV, field strengths in
 * tesla.  Handles are opaque and must be released with the matching
 * destroy call.  Error messages are per thread.
 */
#ifndef VORTEXLENS_H
#define VORTEXLENS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define VLX_OK 0
#define VLX_ERR_INVALID 2
#define VLX_ERR_CONVERGENCE 3

/* Library version string, e.g. "1.0.0". */
const char* vlx_version(void);

/* Description of the most recent failure on the calling thread. */
const char* vlx_last_error(void);

/* ---------------------------------------------------------------- scales */

typedef struct {
  double sigma_L_nm;       /* dispersion of the n=l=0 stationary mode */
  double rho_L_nm;         /* sigma_L sqrt(2n+|l|+1) */
  double omega_rad_per_ns; /* cyclotron angular frequency */
  double Tc_ns;            /* cyclotron period */
  double mu_B_H_keV;       /* Zeeman energy scale */
  double E_L_keV;          /* stationary-mode transverse energy */
} vlx_field_scales;

int vlx_field_scales_get(double h_tesla, int n, int l, vlx_field_scales* out);

/* v/c for a longitudinal kinetic energy. */
int vlx_beta(double e_parallel_keV, double* beta_out);

/* --------------------------------------------------------------- packets */

typedef struct vlx_packet vlx_packet;

/* Freely spreading packet defined by its waist. */
int vlx_free_packet_create(double sigma_w_nm, double t_g_ns, int n, int l,
                           vlx_packet** out);

/* In-field packet defined by its state at the boundary-crossing instant. */
int vlx_field_packet_create(double h_tesla, int n, int l, double sigma0_nm,
                            double sigma0_prime, double t0_ns,
                            double phi0_rad, vlx_packet** out);

void vlx_packet_destroy(vlx_packet* p);

typedef struct {
  double sigma_nm;
  double sigma_prime;
  double rho_nm;    /* sigma sqrt(2n+|l|+1) */
  double phi_G_rad; /* continuous, unwrapped */
} vlx_optics;

int vlx_packet_eval(const vlx_packet* p, double t_ns, vlx_optics* out);

/* Mean transverse energy (time independent for both packet kinds). */
int vlx_packet_energy_keV(const vlx_packet* p, double* out);

/* Complex amplitude at one point of the transverse plane. */
int vlx_packet_amplitude(const vlx_packet* p, double t_ns, double rho_nm,
                         double phi_rad, double* re, double* im);

/* Number of maxima of the radial probability density (= n + 1). */
int vlx_packet_ring_count(const vlx_packet* p, double t_ns, int* rings);

typedef struct {
  double sigma_st_nm;     /* stationary size the packet breathes around */
  double amplitude_ratio; /* modulation depth A of sigma^2, in [0,1) */
  double theta_rad;       /* oscillation phase offset */
  int s;                  /* direction sign: -1, 0 or +1 */
  double sigma_min_nm;
  double sigma_max_nm;
  double Tc_ns;
  double xi_1;      /* sigma_L / sigma_0 */
  double xi_2;      /* |sigma_0'| sigma_L / lambda_C */
  double zeta;      /* sigma_st / sigma_L */
  double delta_zeta;
} vlx_oscillation;

/* In-field packets only. */
int vlx_packet_oscillation(const vlx_packet* p, vlx_oscillation* out);

/* Writes "landau_like", "sine_like" or "bouncing" into buf. */
int vlx_packet_regime(const vlx_packet* p, char* buf, size_t buf_len);

/* ------------------------------------------------------------- emittance */

typedef struct {
  double eps_total_nm;
  double eps_total_lambdaC;
  double eps_per_axis_nm;
} vlx_emittance;

/* t_ns is ignored for free packets (their emittance is constant). */
int vlx_packet_emittance(const vlx_packet* p, double t_ns, vlx_emittance* out);

/* Free-packet and stationary-mode reference emittances, nm. */
int vlx_emittance_references(int n, int l, double* eps_f_nm, double* eps_L_nm);

/* sigma_st^2/sigma_L^2 interval favouring sub-free emittance; nonempty
 * only for l < 0 with |l| > 2n+1. */
int vlx_classicality_window(int n, int l, int* nonempty, double* lower,
                            double* upper);

/* ---------------------------------------------------------- decomposition */

typedef struct vlx_decomposition vlx_decomposition;

int vlx_decompose(const vlx_packet* field_packet, double tail_tolerance,
                  vlx_decomposition** out);
void vlx_decomposition_destroy(vlx_decomposition* d);

int vlx_decomposition_size(const vlx_decomposition* d, int* count);
int vlx_decomposition_stats(const vlx_decomposition* d, double* zeta,
                            double* tail, int* truncation_n_max);
int vlx_decomposition_coefficient(const vlx_decomposition* d, int n_prime,
                                  double* re, double* im);

/* Quadrature cross-check of one coefficient, from the entry state. */
int vlx_decomposition_oracle(const vlx_packet* field_packet, int n_prime,
                             double* re, double* im);

/* ---------------------------------------------------------------- off-axis */

typedef struct {
  int n_prime;
  int l_prime;
  double magnitude;
} vlx_off_axis_entry;

/* First-order mode mixing of a packet tilted against the field axis.
 * Fills at most cap entries (diagonal first), sets *count to the total. */
int vlx_off_axis(int n, int l, double alpha_rad, double mean_p_z_inv_nm,
                 double sigma_t0_nm, vlx_off_axis_entry* entries, int cap,
                 int* count);

/* ---------------------------------------------------------------- validity */

typedef struct {
  char condition[40];
  double lhs;
  double rhs;
  double margin; /* rhs / lhs */
  int nonrelativistic;
} vlx_validity_entry;

int vlx_validity_free(int n, int l, double rho_w_nm, double threshold,
                      vlx_validity_entry* entries, int cap, int* count);
int vlx_validity_landau(int n, int l, double h_tesla, double threshold,
                        vlx_validity_entry* entries, int cap, int* count);
int vlx_validity_field(int n, int l, double h_tesla, double sigma0_nm,
                       double sigma0_prime, double threshold,
                       vlx_validity_entry* entries, int cap, int* count);

/* ------------------------------------------------------------- high level */

/* Figure ids: "2", "3", "4", "5", "6", "8", "B1".  Writes CSV files plus a
 * metadata JSON into out_dir ("." when empty); as_json switches to a single
 * JSON document. */
int vlx_run_figure(const char* figure_id, const char* out_dir, int as_json);

/* Scenario config file -> output files in out_dir. */
int vlx_run_scenario(const char* config_path, const char* out_dir,
                     int as_json);

/* Landau-basis weights of a named preset (fig7a..fig7l and any other
 * boundary-state preset). */
int vlx_run_decompose_preset(const char* preset_id, double tail_tolerance,
                             const char* out_dir, int as_json);

/* Same, for an explicit packet. */
int vlx_write_decomposition(const vlx_packet* field_packet,
                            double tail_tolerance, const char* name,
                            const char* out_dir, int as_json);

/* Comma-joined known preset ids; returns VLX_ERR_INVALID if buf is too
 * small. */
int vlx_preset_ids(char* buf, size_t buf_len);

#ifdef __cplusplus
}
#endif

#endif /* VORTEXLENS_H */
