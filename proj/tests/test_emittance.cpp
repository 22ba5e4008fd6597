#include <cmath>

#include "doctest.h"
#include "emittance.hpp"
#include "oracle.hpp"

using namespace vlx;

namespace {
const double kLc = consts::lambda_C;
}

TEST_CASE("free-packet emittance values") {
  // Gaussian ground mode saturates the uncertainty bound: zero excess.
  CHECK(emittance_free({0, 0}) == 0.0);
  CHECK(emittance_free({0, 1}) == doctest::Approx(kLc * std::sqrt(3.0)));
  CHECK(emittance_free({0, -1}) == emittance_free({0, 1}));
  CHECK(emittance_free({1, 0}) == doctest::Approx(kLc * std::sqrt(8.0)));
  CHECK(emittance_free({0, 3}) == doctest::Approx(kLc * std::sqrt(15.0)));
}

TEST_CASE("stationary-mode emittance can undercut the free packet") {
  // l < 0 lowers the in-field value below the free minimum for the same
  // quantum numbers; l > 0 raises it.
  const double ef = emittance_free({0, 3});
  CHECK(emittance_landau({0, 3}) > ef);
  CHECK(emittance_landau({0, -3}) < ef);
  CHECK(emittance_landau({0, -3}) ==
        doctest::Approx(kLc * std::sqrt(7.0)).epsilon(1e-13));
  CHECK(emittance_landau({0, 3}) ==
        doctest::Approx(kLc * std::sqrt(55.0)).epsilon(1e-13));
}

TEST_CASE("in-field emittance: rate cancels, size alone enters") {
  const FieldContext ctx = field_context(1.9);
  const QuantumNumbers qn{0, -3};
  // Two entries with the same size and different rates give the same
  // emittance at the entry instant.
  const OscillationParams a =
      oscillation_params(ctx, FieldInitialConditions{25.0, 0.0, 0.0, 0.0});
  const OscillationParams b =
      oscillation_params(ctx, FieldInitialConditions{25.0, 4e-4, 0.0, 0.0});
  CHECK(emittance_field(qn, a, ctx, 0.0) ==
        doctest::Approx(emittance_field(qn, b, ctx, 0.0)).epsilon(1e-12));
  // At sigma = sigma_L the in-field value equals the stationary one.
  const OscillationParams land = oscillation_params(
      ctx, FieldInitialConditions{ctx.sigma_L, 0.0, 0.0, 0.0});
  CHECK(emittance_field(qn, land, ctx, 3e5) ==
        doctest::Approx(emittance_landau(qn)).epsilon(1e-12));
  // Periodic with the cyclotron period.
  CHECK(emittance_field(qn, a, ctx, 0.25 * a.period_ct()) ==
        doctest::Approx(emittance_field(qn, a, ctx, 1.25 * a.period_ct()))
            .epsilon(1e-10));
}

TEST_CASE("closed emittance against the moment quadrature") {
  const FieldContext ctx = field_context(1.9);
  for (const QuantumNumbers qn : {QuantumNumbers{0, -3}, QuantumNumbers{0, 3},
                                  QuantumNumbers{2, 1}}) {
    const FieldInitialConditions ic{25.0, 0.0, 0.0, 0.0};
    const OscillationParams p = oscillation_params(ctx, ic);
    for (double frac : {0.0, 0.2, 0.45, 0.8}) {
      const double t = ic.t0 + frac * p.period_ct();
      const OpticalState st = field_optics(qn, p, t);
      const double closed = emittance_field(qn, p, ctx, t);
      const double numeric = oracle_emittance(qn, st, &ctx);
      CHECK(std::abs(numeric / closed - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("emittance history bundles the references") {
  const FieldContext ctx = field_context(1.9);
  const QuantumNumbers qn{0, -3};
  const FieldInitialConditions ic{25.0, 0.0, 0.0, 0.0};
  const OscillationParams p = oscillation_params(ctx, ic);
  const double period = p.period_ct();
  const EmittanceSeries s = emittance_series(qn, p, ctx, 0.0, period, 41);
  REQUIRE(s.t_grid.size() == 41);
  REQUIRE(s.eps_H.size() == 41);
  CHECK(s.t_grid.front() == 0.0);
  CHECK(s.t_grid.back() == doctest::Approx(period).epsilon(1e-14));
  CHECK(s.eps_f == emittance_free(qn));
  CHECK(s.eps_L == emittance_landau(qn));
  for (std::size_t i = 0; i < s.t_grid.size(); ++i) {
    CHECK(s.eps_H[i] ==
          doctest::Approx(emittance_field(qn, p, ctx, s.t_grid[i]))
              .epsilon(1e-13));
  }
  CHECK(EmittanceSeries::per_axis(3.0) == 1.5);
  CHECK(EmittanceSeries::in_lambda_C(kLc * 7.0) == doctest::Approx(7.0));
}

TEST_CASE("classicality window") {
  // Exact interval for the lowest negative-l mode family.
  const ClassicalityWindow w = classicality_window({0, -3});
  CHECK(w.nonempty);
  CHECK(w.lower == 13.0 / 12.0);
  CHECK(w.upper == 1.5);
  // |l| must exceed 2n + 1 for the interval to open.
  CHECK_FALSE(classicality_window({0, -1}).nonempty);
  CHECK_FALSE(classicality_window({1, -3}).nonempty);
  CHECK(classicality_window({1, -4}).nonempty);
  CHECK_FALSE(classicality_window({0, 3}).nonempty);
  CHECK_FALSE(classicality_window({2, 0}).nonempty);
  const ClassicalityWindow big = classicality_window({0, -4});
  CHECK(big.lower == doctest::Approx(5.0 / 16.0 + 4.0 / 5.0).epsilon(1e-14));
  CHECK(big.upper == doctest::Approx(8.0 / 5.0).epsilon(1e-14));
}

TEST_CASE("emittance dip criterion uses the narrowest size") {
  const FieldContext ctx = field_context(1.9);
  const QuantumNumbers qn{0, -3};
  // A breathing packet dips below the free emittance whenever its minimum
  // size satisfies N sigma_min^2 < 2|l| sigma_L^2, even if the average size
  // sits outside the heuristic window.
  const OscillationParams wide =
      oscillation_params(ctx, FieldInitialConditions{25.0, 0.0, 0.0, 0.0});
  CHECK(emittance_dip_exists(qn, wide));
  double best = 1e300;
  for (int i = 0; i <= 2000; ++i) {
    best = std::min(best,
                    emittance_field(qn, wide, ctx, wide.period_ct() * i / 2000.0));
  }
  CHECK(best < emittance_free(qn));
  // Positive l never dips.
  CHECK_FALSE(emittance_dip_exists({0, 3}, wide));
  // Small |l| with mild breathing: the minimum size stays too large and the
  // curve never crosses the free reference.
  const QuantumNumbers small{2, -1};
  const OscillationParams mild = oscillation_params(
      ctx, FieldInitialConditions{1.2 * ctx.sigma_L, 0.0, 0.0, 0.0});
  CHECK(mild.sigma_min_sq() * small.N() >
        2.0 * small.abs_l() * ctx.sigma_L * ctx.sigma_L);
  CHECK_FALSE(emittance_dip_exists(small, mild));
  double low = 1e300;
  for (int i = 0; i <= 2000; ++i) {
    low = std::min(low, emittance_field(small, mild, ctx,
                                        mild.period_ct() * i / 2000.0));
  }
  CHECK(low >= emittance_free(small));
}
