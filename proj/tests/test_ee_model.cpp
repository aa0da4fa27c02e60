#include <doctest.h>

#include "mwrc/ee_model.hpp"
#include "mwrc/errors.hpp"
#include "support/oracles.hpp"

using namespace mwrc;
using doctest::Approx;

TEST_CASE("total power") {
  CHECK(total_power(1, 1, {3, 1, 1}) == 5.0);
  CHECK(total_power(0, 0, {3, 1, 1}) == 1.0);
  CHECK(total_power(2, 0.5, {4, 2, 1}) == 10.0);
  CHECK_THROWS_AS(total_power(-1, 0, {3, 1, 1}), DomainError);
  CHECK_THROWS_AS(total_power(0, -1, {3, 1, 1}), DomainError);
}

TEST_CASE("power model invariants") {
  CHECK_THROWS_AS(PowerModel({2.9, 1, 1}).validate(), DomainError);
  CHECK_THROWS_AS(PowerModel({3, 0.5, 1}).validate(), DomainError);
  CHECK_THROWS_AS(PowerModel({3, 1, 0}).validate(), DomainError);
}

TEST_CASE("EE1 forms") {
  const Ee1Form df = ee1_form_for(Scheme::DF, 1, 1);
  CHECK(df.a1 == 1.5);
  CHECK(df.alpha1 == 1.0);
  CHECK(df.a2 == 1.0);
  CHECK(df.alpha2 == 3.0);

  const Ee1Form ob = ee1_form_for(Scheme::OuterBound, 1, 1);
  CHECK(ob.a1 == 1.5);
  CHECK(ob.alpha1 == 1.0);
  CHECK(ob.a2 == 3.0);
  CHECK(ob.alpha2 == 1.0);

  CHECK_THROWS_AS(ee1_form_for(Scheme::AF, 1, 1), UnsupportedScheme);
  CHECK_THROWS_AS(ee1_form_for(Scheme::NncIan, 1, 1), UnsupportedScheme);
}

TEST_CASE("EE2 forms") {
  const Ee2Form af = ee2_form_for(Scheme::AF, 1, 1);
  CHECK(af.alpha == 1.0);
  CHECK(af.a == 1.0);
  CHECK(af.b == Approx(1.0 / 3));
  CHECK(af.c == Approx(1.0 / 3));
  CHECK(af.d == 0.0);

  const Ee2Form snd = ee2_form_for(Scheme::NncSnd, 2, 4);
  CHECK(snd.alpha == 1.5);
  CHECK(snd.a == 2.0);
  CHECK(snd.b == 2.0);
  CHECK(snd.c == 4.0);
  CHECK(snd.d == 0.0);

  // P P0 / (2 P P0 + N0 P0 + 3 P N + N N0) with the denominator as written.
  const Ee2Form ian = ee2_form_for(Scheme::NncIan, 1, 1);
  CHECK(ian.alpha == 3.0);
  CHECK(ian.a == 3.0);
  CHECK(ian.b == 1.0);
  CHECK(ian.c == 1.0);
  CHECK(ian.d == 2.0);

  CHECK_THROWS_AS(ee2_form_for(Scheme::DF, 1, 1), UnsupportedScheme);
  CHECK_THROWS_AS(ee2_form_for(Scheme::OuterBound, 1, 1), UnsupportedScheme);
}

TEST_CASE("EE evaluation") {
  const PowerModel m{3, 1, 1};
  CHECK(eval_ee(Scheme::DF, {1, 1, 1, 1}, m) == Approx(0.3).epsilon(1e-15));
  CHECK(eval_ee(Scheme::AF, {0, 0, 1, 1}, m) == 0.0);
  CHECK(eval_ee(Scheme::NncSnd, {1, 1, 1, 1}, m) ==
        Approx(0.175488750216346854).epsilon(1e-14));
}

TEST_CASE("property: forms reproduce the closed-form rates") {
  testing::ParamGen gen(2024);
  for (int i = 0; i < 5000; ++i) {
    const ChannelParams p = gen.channel();
    for (Scheme s : kAllSchemes) {
      const double direct = sum_rate(s, p);
      const double via_form = form_sum_rate(s, p);
      REQUIRE(via_form == Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: total power strictly increasing") {
  testing::ParamGen gen(9);
  for (int i = 0; i < 1000; ++i) {
    const PowerModel m{gen.uniform(3, 10), gen.uniform(1, 5), gen.log_uniform(1e-2, 1e2)};
    const double P = gen.log_uniform(1e-3, 1e3), P0 = gen.log_uniform(1e-3, 1e3);
    const double base = total_power(P, P0, m);
    REQUIRE(base >= m.Pc);
    REQUIRE(total_power(P * 1.5, P0, m) > base);
    REQUIRE(total_power(P, P0 * 1.5, m) > base);
  }
}

TEST_CASE("EE vanishes as user power grows with relay power fixed") {
  const PowerModel m{3, 1, 1};
  for (Scheme s : {Scheme::DF, Scheme::NncSnd, Scheme::NncIan})
    CHECK(eval_ee(s, {1e6, 1, 1, 1}, m) < 1e-5);
}
