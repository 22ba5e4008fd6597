#include <cmath>

#include "doctest.h"
#include "validity.hpp"

using namespace vlx;

TEST_CASE("free-packet bound") {
  const QuantumNumbers qn{0, 3};
  const double rho_w = 6.5;  // 3.25 nm waist, N = 4
  const ValidityReport r = validity_free(qn, rho_w);
  REQUIRE(r.entries.size() == 1);
  const ValidityEntry& e = r.entries[0];
  CHECK(e.condition == "free");
  CHECK(e.lhs == 4.0);
  CHECK(e.rhs == doctest::Approx(rho_w / consts::lambda_C).epsilon(1e-14));
  CHECK(e.margin == doctest::Approx(e.rhs / e.lhs).epsilon(1e-14));
  CHECK(e.nonrelativistic);
  CHECK(r.all_nonrelativistic());
  // A nm-scale waist with thousands of quanta would violate the bound.
  const ValidityReport bad = validity_free({600, 3000}, 1.0);
  CHECK_FALSE(bad.entries[0].nonrelativistic);
  CHECK_FALSE(bad.all_nonrelativistic());
}

TEST_CASE("stationary-mode bound tracks 2n+|l|+l+1") {
  const FieldContext ctx = field_context(1.9);
  const ValidityReport plus = validity_landau({0, 3}, ctx);
  REQUIRE(plus.entries.size() == 1);
  CHECK(plus.entries[0].condition == "landau");
  CHECK(plus.entries[0].lhs == doctest::Approx(std::sqrt(7.0)).epsilon(1e-14));
  CHECK(plus.entries[0].rhs ==
        doctest::Approx(ctx.sigma_L / consts::lambda_C).epsilon(1e-14));
  CHECK(plus.entries[0].nonrelativistic);
  // The lowering side is energetically cheap: same |l|, smaller lhs.
  const ValidityReport minus = validity_landau({0, -3}, ctx);
  CHECK(minus.entries[0].lhs == 1.0);
  CHECK(minus.entries[0].margin > plus.entries[0].margin);
}

TEST_CASE("in-field packet carries three equivalent bounds") {
  const FieldContext ctx = field_context(1.9);
  const QuantumNumbers qn{0, 3};
  const FieldInitialConditions ic{55.55, 0.0, 0.0, 0.0};
  const ValidityReport r = validity_field(qn, ctx, ic);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].condition == "field");
  CHECK(r.entries[1].condition == "field_average_size");
  CHECK(r.entries[2].condition == "field_entry_size");
  for (const ValidityEntry& e : r.entries) {
    CHECK(e.margin == doctest::Approx(e.rhs / e.lhs).epsilon(1e-14));
    CHECK(e.nonrelativistic);
  }
  // Internal consistency of the full form: lhs^2 = N zeta^2 + l.
  const OscillationParams p = oscillation_params(ctx, ic);
  const double zeta2 = p.zeta() * p.zeta();
  CHECK(r.entries[0].lhs ==
        doctest::Approx(std::sqrt(qn.N() * zeta2 + qn.l)).epsilon(1e-12));
}

TEST_CASE("threshold moves the verdict, not the numbers") {
  const FieldContext ctx = field_context(1.9);
  const ValidityReport loose = validity_landau({0, 3}, ctx, 10.0);
  const ValidityReport strict =
      validity_landau({0, 3}, ctx, 1e9);
  CHECK(loose.entries[0].margin == strict.entries[0].margin);
  CHECK(loose.all_nonrelativistic());
  CHECK_FALSE(strict.all_nonrelativistic());
  CHECK(strict.threshold == 1e9);
}
