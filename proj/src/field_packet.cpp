#include "field_packet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "constants.hpp"

namespace vlx {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLandauSnapTol = 1e-12;
constexpr double kReconstructTol = 1e-10;
}  // namespace

void validate_field_ic(const FieldInitialConditions& ic) {
  if (!std::isfinite(ic.sigma0) || ic.sigma0 <= 0.0) {
    throw std::invalid_argument("entry dispersion must be finite and positive");
  }
  if (!std::isfinite(ic.sigma0_prime) || !std::isfinite(ic.t0) ||
      !std::isfinite(ic.phi0)) {
    throw std::invalid_argument("entry state must be finite");
  }
}

double OscillationParams::sigma_st() const { return std::sqrt(sigma_st_sq); }
double OscillationParams::sigma_L() const { return std::sqrt(sigma_L_sq); }

double OscillationParams::sigma_min_sq() const {
  // sigma_st^2 (1 - A) loses digits as A -> 1; use
  // sigma_st^2 (1 - A^2)/(1 + A) = sigma_L^4 / (sigma_st^2 (1 + A)).
  return sigma_L_sq * sigma_L_sq / (sigma_st_sq * (1.0 + A));
}

double OscillationParams::sigma_max_sq() const {
  return sigma_st_sq * (1.0 + A);
}

double OscillationParams::one_minus_A() const {
  const double r = sigma_L_sq / sigma_st_sq;  // = sqrt(1 - A^2)
  return r * r / (1.0 + A);
}

double OscillationParams::zeta() const {
  return std::sqrt(sigma_st_sq / sigma_L_sq);
}

double OscillationParams::zeta_sq_minus_one() const { return D / sigma_L_sq; }

double OscillationParams::period_ct() const { return 2.0 * kPi / omega; }

OscillationParams oscillation_params(const FieldContext& ctx,
                                     const FieldInitialConditions& ic) {
  validate_field_ic(ic);
  const double lc = consts::lambda_C;
  const double sL = ctx.sigma_L;
  const double sL2 = sL * sL;
  const double s0 = ic.sigma0;
  const double s02 = s0 * s0;

  OscillationParams p;
  p.omega = ctx.omega;
  p.sigma_L_sq = sL2;
  p.t0 = ic.t0;
  p.phi0 = ic.phi0;

  if (std::abs(ic.sigma0_prime) <= kLandauSnapTol &&
      std::abs(s0 - sL) <= kLandauSnapTol * sL) {
    // Non-breathing solution: the packet already sits at the stationary size.
    p.sigma_st_sq = sL2;
    p.A = 0.0;
    p.theta = 0.0;
    p.s = 0;
    p.D = 0.0;
    return p;
  }

  const double xi1_sq = sL2 / s02;
  const double P = ic.sigma0_prime * sL2 / (lc * s0);
  // Cancellation-free building blocks: q = xi1^2 - 1, g = xi1^2 + 1.
  const double q = (sL - s0) * (sL + s0) / s02;
  const double g = xi1_sq + 1.0;

  p.sigma_st_sq = 0.5 * s02 * (1.0 + xi1_sq * xi1_sq + P * P);
  p.D = 0.5 * s02 * (q * q + P * P);  // sigma_st^2 - sigma_L^2
  // A sigma_st^2 = (sigma0^2/2) sqrt((q^2+P^2)(g^2+P^2))
  const double mod = std::sqrt((q * q + P * P) * (g * g + P * P));
  p.A = 0.5 * s02 * mod / p.sigma_st_sq;

  if (ic.sigma0_prime != 0.0) {
    p.s = ic.sigma0_prime > 0.0 ? 1 : -1;
  } else {
    p.s = sL > s0 ? 1 : -1;
  }

  // theta solves sin(theta) = (sigma_st^2 - sigma0^2)/(A sigma_st^2) on the
  // branch that also reproduces sigma0'.  Both sine and cosine have exact
  // cancellation-free forms proportional to (q g + P^2) and 2|P|, so the
  // principal-branch arcsin is evaluated as atan2 of the pair; the common
  // positive scale drops out.  cos(theta) >= 0 under the sign convention for
  // s, so the supplementary branch can only win if that convention were
  // broken - the reconstruction check below guards it.
  const double theta0 = std::atan2(q * g + P * P, 2.0 * std::abs(P));

  auto reconstruction_error = [&](double theta) {
    const double sq = p.sigma_st_sq * (1.0 - p.A * std::sin(theta));
    const double rate = p.sigma_st_sq * p.A * static_cast<double>(p.s) *
                        p.omega * std::cos(theta) / (2.0 * std::sqrt(sq));
    const double sq_scale = std::max(s02, p.A * p.sigma_st_sq);
    const double rate_scale =
        std::max(std::abs(ic.sigma0_prime),
                 p.A * p.sigma_st_sq * p.omega / (2.0 * s0));
    return std::abs(sq - s02) / sq_scale +
           std::abs(rate - ic.sigma0_prime) / rate_scale;
  };

  const double err_main = reconstruction_error(theta0);
  p.theta = theta0;
  if (err_main > kReconstructTol) {
    const double err_flip = reconstruction_error(kPi - theta0);
    if (err_flip >= err_main || err_flip > kReconstructTol) {
      throw std::logic_error(
          "oscillation parameters failed to reproduce the entry state");
    }
    p.theta = kPi - theta0;
  }
  return p;
}

OpticalState field_dispersion(const OscillationParams& p, double t) {
  OpticalState st;
  st.t = t;
  if (p.s == 0) {
    st.sigma = std::sqrt(p.sigma_L_sq);
    st.sigma_prime = 0.0;
    return st;
  }
  const double x = static_cast<double>(p.s) * p.omega * (t - p.t0) - p.theta;
  // 1 + A sin x rewritten as (1 - A) + 2 A sin^2(x/2 + pi/4): near the
  // breathing minima the naive form collapses to roundoff once A -> 1 (the
  // weak-field limit drives 1 - A below 1e-13), while the grouped form keeps
  // full relative accuracy there.
  const double half = std::sin(0.5 * x + 0.25 * kPi);
  const double sq =
      p.sigma_st_sq * (p.one_minus_A() + 2.0 * p.A * half * half);
  st.sigma = std::sqrt(sq);
  st.sigma_prime = p.sigma_st_sq * p.A * static_cast<double>(p.s) * p.omega *
                   std::cos(x) / (2.0 * st.sigma);
  return st;
}

namespace {

// Continuous antiderivative F of  (r/2) / (1 + A sin x)  with r = sqrt(1-A^2),
// normalized so F(0) = atan(A/r).  F gains exactly pi per 2*pi period.
//
// The textbook half-angle form atan((tan(x/2)+A)/r) needs tan near its pole
// when x is close to an odd multiple of pi, and gluing its branches there is
// numerically fragile.  Instead the period is split: the tan form covers
// |y| <= pi/2 and a cot form (substitution u = -cot(x/2), seam at even
// multiples of pi) covers the rest, each evaluated only where its half-angle
// function is small.
double gouy_antiderivative(double x, double A, double r) {
  const double k = std::floor((x + kPi) / (2.0 * kPi));
  const double y = x - 2.0 * kPi * k;  // y in [-pi, pi]
  if (std::abs(y) <= 0.5 * kPi) {
    return std::atan((std::tan(0.5 * y) + A) / r) + kPi * k;
  }
  const double u = -1.0 / std::tan(0.5 * y);  // cot is tame for |y| > pi/2
  const double base = std::atan((u - A) / r) + kPi * k;
  if (y > 0.0) {
    return base + 2.0 * std::atan((1.0 + A) / r);
  }
  return base - 2.0 * std::atan((1.0 - A) / r);
}

}  // namespace

double field_gouy(const QuantumNumbers& qn, const OscillationParams& p,
                  double t) {
  validate_quantum_numbers(qn);
  const double tau = t - p.t0;
  const double nn = static_cast<double>(qn.N());
  if (p.s == 0) {
    return p.phi0 +
           (nn + static_cast<double>(qn.l)) * 0.5 * p.omega * tau;
  }
  const double r = p.sigma_L_sq / p.sigma_st_sq;  // = sqrt(1 - A^2)
  const double sd = static_cast<double>(p.s);
  const double x = sd * p.omega * tau - p.theta;
  return p.phi0 + 0.5 * static_cast<double>(qn.l) * p.omega * tau +
         nn * sd *
             (gouy_antiderivative(x, p.A, r) -
              gouy_antiderivative(-p.theta, p.A, r));
}

OpticalState field_optics(const QuantumNumbers& qn, const OscillationParams& p,
                          double t) {
  OpticalState st = field_dispersion(p, t);
  st.phi_G = field_gouy(qn, p, t);
  return st;
}

double field_rms_radius(const QuantumNumbers& qn, const OscillationParams& p,
                        double t) {
  validate_quantum_numbers(qn);
  return field_dispersion(p, t).sigma *
         std::sqrt(static_cast<double>(qn.N()));
}

double field_energy(const FieldContext& ctx, const QuantumNumbers& qn,
                    const OscillationParams& p) {
  validate_quantum_numbers(qn);
  return 0.5 * ctx.omega *
         (static_cast<double>(qn.N()) * p.sigma_st_sq / p.sigma_L_sq +
          static_cast<double>(qn.l));
}

double field_energy_instant(const FieldContext& ctx, const QuantumNumbers& qn,
                            const OpticalState& st) {
  validate_quantum_numbers(qn);
  const double lc = consts::lambda_C;
  const double sL2 = ctx.sigma_L * ctx.sigma_L;
  const double kin = (lc / st.sigma) * (lc / st.sigma) +
                     st.sigma_prime * st.sigma_prime +
                     (lc * st.sigma / sL2) * (lc * st.sigma / sL2);
  return static_cast<double>(qn.N()) * kin / (2.0 * lc) +
         0.5 * static_cast<double>(qn.l) * ctx.omega;
}

Regime classify_regime(const OscillationParams& p,
                       const RegimeThresholds& th) {
  if (p.A < th.landau_A) {
    return Regime::landau_like;
  }
  if (p.zeta() >= th.bouncing_zeta) {
    return Regime::bouncing;
  }
  return Regime::sine_like;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::landau_like:
      return "landau_like";
    case Regime::sine_like:
      return "sine_like";
    case Regime::bouncing:
      return "bouncing";
  }
  return "unknown";
}

ComparisonMetrics comparison_metrics(const FieldContext& ctx,
                                     const FieldInitialConditions& ic) {
  validate_field_ic(ic);
  ComparisonMetrics m;
  m.xi1 = ctx.sigma_L / ic.sigma0;
  m.xi2 = std::abs(ic.sigma0_prime) * ctx.sigma_L / consts::lambda_C;
  const OscillationParams p = oscillation_params(ctx, ic);
  m.zeta = p.zeta();
  // zeta - 1 = (zeta^2 - 1)/(zeta + 1) avoids cancellation near the Landau
  // point, where zeta^2 - 1 itself is available cancellation-free.
  m.delta_zeta = p.zeta_sq_minus_one() / (m.zeta + 1.0);
  return m;
}

FieldInitialConditions free_to_field(const QuantumNumbers& qn,
                                     const WaistSpec& w, double t0) {
  const OpticalState st = free_optics(qn, w, t0);
  FieldInitialConditions ic;
  ic.sigma0 = st.sigma;
  ic.sigma0_prime = st.sigma_prime;
  ic.t0 = t0;
  ic.phi0 = st.phi_G;
  return ic;
}

std::vector<double> vanishing_field_deviation(
    const QuantumNumbers& qn, const WaistSpec& w, double t0,
    const std::vector<double>& H_tesla, const std::vector<double>& t_grid) {
  const FieldInitialConditions ic = free_to_field(qn, w, t0);
  std::vector<double> out;
  out.reserve(H_tesla.size());
  for (double H : H_tesla) {
    const FieldContext ctx = field_context(H);
    const OscillationParams p = oscillation_params(ctx, ic);
    double worst = 0.0;
    for (double t : t_grid) {
      const double in_field = field_dispersion(p, t).sigma;
      const double free_space =
          free_dispersion_general(ic.sigma0, ic.sigma0_prime, t0, t).sigma;
      worst = std::max(worst, std::abs(in_field - free_space) / free_space);
    }
    out.push_back(worst);
  }
  return out;
}

}  // namespace vlx

