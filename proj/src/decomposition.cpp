#include "decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "laguerre.hpp"
#include "wavefunction.hpp"

namespace vlx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTruncationStart = 16;
constexpr int kTruncationCap = 4096;

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1]
/// (Newton refinement of the cosine root estimates).
struct GaussLegendreRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussLegendreRule gauss_legendre(int m) {
  GaussLegendreRule rule;
  rule.x.resize(m);
  rule.w.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double pp = 1.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[m - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[m - 1 - i] = rule.w[i];
  }
  return rule;
}

/// Everything the closed form needs about the entry state, in a shape that
/// survives both the near-stationary and the strongly mismatched limits.
struct BoundaryParams {
  std::complex<double> B;    ///< (1 + xi1^2 - i xi1 xi2~)/2
  std::complex<double> Bm1;  ///< B - 1
  std::complex<double> BmX;  ///< B - xi1^2 = -conj(B - 1)
  double half_m1 = 0.0;      ///< (zeta^2 - 1)/2, cancellation-free
  double half_p1 = 0.0;      ///< (zeta^2 + 1)/2
};

BoundaryParams boundary_params(const FieldContext& ctx,
                               const FieldInitialConditions& ic) {
  validate_field_ic(ic);
  const double sL = ctx.sigma_L;
  const double s0 = ic.sigma0;
  const double xi1 = sL / s0;
  const double xi2s = ic.sigma0_prime * sL / consts::lambda_C;  // signed

  BoundaryParams bp;
  const double x2 = xi1 * xi1;
  const double im = -0.5 * xi1 * xi2s;
  bp.B = {0.5 * (1.0 + x2), im};
  bp.Bm1 = {0.5 * (x2 - 1.0), im};
  bp.BmX = {0.5 * (1.0 - x2), im};
  // zeta^2 -+ 1 = ((xi1 -+ 1/xi1)^2 + xi2~^2)/2 keeps full precision for
  // entry states close to the stationary one.
  const double u = (sL - s0) * (sL + s0) / (sL * s0);
  const double v = xi1 + 1.0 / xi1;
  bp.half_m1 = 0.25 * (u * u + xi2s * xi2s);
  bp.half_p1 = 0.25 * (v * v + xi2s * xi2s);
  return bp;
}

/// Phase common to every coefficient: the stationary mode's frequency at the
/// entry instant minus the Gouy phase carried across the boundary.
double entry_phase(const QuantumNumbers& qn, int n_prime,
                   const FieldContext& ctx, const FieldInitialConditions& ic) {
  const double e_np =
      0.5 * ctx.omega * (2.0 * n_prime + qn.abs_l() + qn.l + 1.0);
  return e_np * ic.t0 - ic.phi0;
}

/// Terminating hypergeometric sum_{k=0}^{m} t_k with
///   t_{k+1}/t_k = (k - m)(k - m - al) x / ((k - m - M - al)(k + 1)),
/// an alternating series for x > 0.  Returns log|F| and sign(F); a sign of 0
/// flags an exact cancellation (F = 0).
void hyp_terminating(int m, int M, int al, double x, double& log_abs,
                     int& sign) {
  std::vector<double> lt(m + 1);
  std::vector<int> st(m + 1);
  lt[0] = 0.0;
  st[0] = 1;
  const double lx = std::log(x);
  double run = 0.0;
  int s = 1;
  for (int k = 0; k < m; ++k) {
    const double num = static_cast<double>(m - k) * (m + al - k);
    const double den = static_cast<double>(m + M + al - k) * (k + 1);
    run += std::log(num) - std::log(den) + lx;
    s = -s;
    lt[k + 1] = run;
    st[k + 1] = s;
  }
  const double lmax = *std::max_element(lt.begin(), lt.end());
  double sum = 0.0, comp = 0.0;  // compensated accumulation
  for (int k = 0; k <= m; ++k) {
    const double y = st[k] * std::exp(lt[k] - lmax) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (sum == 0.0) {
    log_abs = -std::numeric_limits<double>::infinity();
    sign = 0;
    return;
  }
  log_abs = lmax + std::log(std::abs(sum));
  sign = sum > 0.0 ? 1 : -1;
}

}  // namespace

std::complex<double> landau_coefficient(const QuantumNumbers& qn, int n_prime,
                                        const FieldContext& ctx,
                                        const FieldInitialConditions& ic) {
  validate_quantum_numbers(qn);
  if (n_prime < 0)
    throw std::invalid_argument("stationary radial index must be >= 0");

  const int n = qn.n;
  const int al = qn.abs_l();
  const BoundaryParams bp = boundary_params(ctx, ic);
  const double base = entry_phase(qn, n_prime, ctx, ic);

  if (bp.half_m1 == 0.0) {
    // Entry state coincides with the stationary mode: one term survives.
    if (n_prime != n) return {0.0, 0.0};
    return std::polar(1.0, base);
  }

  const int m = std::min(n, n_prime);
  const int M = std::max(n, n_prime);
  const int K = n + n_prime + al + 1;

  double log_f = 0.0;
  int sign_f = 1;
  hyp_terminating(m, M, al, bp.half_p1, log_f, sign_f);
  if (sign_f == 0) return {0.0, 0.0};
  // The hypergeometric above is the transformed series; undo the
  // (-2/(zeta^2-1))^m factor's sign to recover the original one.
  const int sign_orig = (m % 2 == 0) ? sign_f : -sign_f;

  const double log_c =
      std::lgamma(static_cast<double>(K)) -
      0.5 * (std::lgamma(n + 1.0) + std::lgamma(n_prime + 1.0) +
             std::lgamma(n + al + 1.0) + std::lgamma(n_prime + al + 1.0));
  // |a|: the sigma_L/sigma0 ratio cancels; only zeta survives.
  const double log_mag = log_c + 0.5 * (M - m) * std::log(bp.half_m1) -
                         0.5 * K * std::log(bp.half_p1) + log_f;

  double chi = base + n_prime * std::arg(bp.Bm1) + n * std::arg(bp.BmX) -
               static_cast<double>(K) * std::arg(bp.B);
  if (sign_orig < 0) chi += kPi;
  return std::polar(std::exp(log_mag), chi);
}

DecompositionResult landau_coefficients(const QuantumNumbers& qn,
                                        const FieldInitialConditions& ic,
                                        const FieldContext& ctx,
                                        double tail_tolerance) {
  validate_quantum_numbers(qn);
  if (!(tail_tolerance > 0.0) || !(tail_tolerance < 1.0))
    throw std::invalid_argument("tail tolerance must lie in (0, 1)");

  DecompositionResult out;
  out.zeta = comparison_metrics(ctx, ic).zeta;

  double sum_sq = 0.0, comp = 0.0;
  int size = 0;
  for (int target = kTruncationStart; target <= kTruncationCap; target *= 2) {
    for (; size < target; ++size) {
      const std::complex<double> a = landau_coefficient(qn, size, ctx, ic);
      out.coefficients.push_back(a);
      const double y = std::norm(a) - comp;
      const double t = sum_sq + y;
      comp = (t - sum_sq) - y;
      sum_sq = t;
    }
    out.truncation_n_max = size - 1;
    out.tail = 1.0 - sum_sq;
    if (out.tail < tail_tolerance) return out;
  }
  throw convergence_error(
      "stationary-mode expansion did not capture the packet within the basis cap",
      out.tail);
}

std::complex<double> landau_coefficient_oracle(const QuantumNumbers& qn,
                                               int n_prime,
                                               const FieldContext& ctx,
                                               const OpticalState& st) {
  validate_quantum_numbers(qn);
  if (n_prime < 0)
    throw std::invalid_argument("stationary radial index must be >= 0");
  if (!(st.sigma > 0.0) || !std::isfinite(st.sigma_prime))
    throw std::invalid_argument("optical state must have positive dispersion");

  const int n = qn.n;
  const int al = qn.abs_l();
  const double sL = ctx.sigma_L;
  const double sg = st.sigma;
  // Chirp of the moving packet: a phase b rho^2 across the overlap.
  const double b = st.sigma_prime / (2.0 * consts::lambda_C * sg);

  // The integrand is the product of two normalized radial profiles, so every
  // sample is O(1/sigma) and the integral is at most 1 in magnitude; all the
  // extreme scales live inside radial_envelope's log-domain evaluation.  The
  // support ends where the narrower profile runs out of turning points.
  auto reach = [al](double sigma, int n_radial) {
    return sigma * std::sqrt(4.0 * n_radial + 2.0 * al + 80.0);
  };
  const double rho_max = std::min(reach(sL, n_prime), reach(sg, n));

  // Uniform panels sized so each one sees only a few radial oscillations
  // (Laguerre zeros are nearly equispaced in rho) and a bounded chirp phase.
  const double chirp_span = std::abs(b) * rho_max * rho_max;
  const int panels = 4 + (n + n_prime + al) / 3 +
                     static_cast<int>(chirp_span / (6.0 * kPi));
  static const GaussLegendreRule rule = gauss_legendre(32);

  const QuantumNumbers qn_mode{n_prime, qn.l};
  const double h = rho_max / panels;
  std::complex<double> overlap(0.0, 0.0);
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
      const double rho = mid + 0.5 * h * rule.x[j];
      const double f = radial_envelope(qn_mode, sL, rho) *
                       radial_envelope(qn, sg, rho) * rho;
      if (f != 0.0)
        overlap += (0.5 * h * rule.w[j] * f) * std::polar(1.0, b * rho * rho);
    }
  }
  overlap *= 2.0 * kPi;

  // Stationary-mode frequency at the sampling instant, minus the Gouy phase
  // the packet has accumulated by then.
  const double e_np = 0.5 * ctx.omega * (2.0 * n_prime + al + qn.l + 1.0);
  return overlap * std::polar(1.0, e_np * st.t - st.phi_G);
}

std::complex<double> landau_coefficient_oracle(const QuantumNumbers& qn,
                                               int n_prime,
                                               const FieldContext& ctx,
                                               const FieldInitialConditions& ic) {
  validate_field_ic(ic);
  OpticalState st;
  st.sigma = ic.sigma0;
  st.sigma_prime = ic.sigma0_prime;
  st.phi_G = ic.phi0;
  st.t = ic.t0;
  return landau_coefficient_oracle(qn, n_prime, ctx, st);
}

double OffAxisParams::kappa() const {
  return alpha * mean_p_z * sigma_t0 / (4.0 * kPi);
}

namespace {

void validate_off_axis(const OffAxisParams& p) {
  if (!std::isfinite(p.alpha) || p.alpha < 0.0 || p.alpha >= 1.0)
    throw std::invalid_argument("tilt angle must lie in [0, 1) rad");
  if (!std::isfinite(p.mean_p_z) || p.mean_p_z < 0.0)
    throw std::invalid_argument("momentum scale must be finite and >= 0");
  if (!std::isfinite(p.sigma_t0) || p.sigma_t0 < 0.0)
    throw std::invalid_argument("boundary dispersion must be finite and >= 0");
}

}  // namespace

std::vector<OffAxisCoupling> off_axis_couplings(const QuantumNumbers& qn,
                                                const OffAxisParams& params) {
  validate_quantum_numbers(qn);
  validate_off_axis(params);
  const int n = qn.n;
  const int al = qn.abs_l();
  const double k = std::abs(params.kappa());

  std::vector<OffAxisCoupling> out;
  out.push_back({n, qn.l, 1.0});
  std::vector<OffAxisCoupling> mixed;
  for (int dl = -1; dl <= 1; dl += 2) {
    const int lp = qn.l + dl;
    if (std::abs(lp) == al + 1) {  // |l| raised by the tilt
      mixed.push_back({n, lp, k * std::sqrt(n + al + 1.0)});
      if (n >= 1) mixed.push_back({n - 1, lp, k * std::sqrt(static_cast<double>(n))});
    } else {  // |l| lowered
      mixed.push_back({n, lp, k * std::sqrt(static_cast<double>(n + al))});
      mixed.push_back({n + 1, lp, k * std::sqrt(n + 1.0)});
    }
  }
  std::sort(mixed.begin(), mixed.end(),
            [](const OffAxisCoupling& a, const OffAxisCoupling& b) {
              return a.l_prime != b.l_prime ? a.l_prime < b.l_prime
                                            : a.n_prime < b.n_prime;
            });
  out.insert(out.end(), mixed.begin(), mixed.end());
  return out;
}

double off_axis_coefficient(const QuantumNumbers& qn, int n_prime, int l_prime,
                            const OffAxisParams& params) {
  if (n_prime < 0)
    throw std::invalid_argument("stationary radial index must be >= 0");
  const std::vector<OffAxisCoupling> all = off_axis_couplings(qn, params);
  for (const OffAxisCoupling& c : all) {
    if (c.n_prime == n_prime && c.l_prime == l_prime) return c.magnitude;
  }
  return 0.0;
}

}  // namespace vlx
