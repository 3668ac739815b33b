#include <cmath>

#include "doctest.h"
#include "rootmaps/asymptotics.hpp"
#include "rootmaps/errors.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

TEST_CASE("tau examples") {
  AsymptoticConstants c;
  CHECK(c.tau(1) == make_rational(1, 3));
  CHECK(c.tau(2) == make_rational(49, 18));
  const Rational tau3 = make_rational(1, 3) * 11 * 9 * make_rational(49, 18) + make_rational(1, 2) * 2 * make_rational(1, 3) * make_rational(49, 18);
  CHECK(c.tau(3) == tau3);
  CHECK_THROWS_AS(c.tau(0), std::invalid_argument);
}

TEST_CASE("tau is positive and increasing") {
  AsymptoticConstants c;
  for (int g = 1; g <= 12; ++g) {
    CHECK(c.tau(g) > 0);
    if (g > 1) CHECK(c.tau(g) > c.tau(g - 1));
  }
}

TEST_CASE("Gamma at half-integers") {
  const HalfIntegerGamma g9 = gamma_half(9);
  CHECK(g9.has_sqrt_pi);
  CHECK(g9.rational_part == make_rational(105, 16));
  const HalfIntegerGamma g14 = gamma_half(14);
  CHECK(!g14.has_sqrt_pi);
  CHECK(g14.rational_part == 720);
  CHECK(gamma_half(1).rational_part == 1);
  // Gamma(z + 1) = z Gamma(z)
  for (int twice = 1; twice <= 30; ++twice) {
    const HalfIntegerGamma a = gamma_half(twice), b = gamma_half(twice + 2);
    CHECK(a.has_sqrt_pi == b.has_sqrt_pi);
    CHECK(b.rational_part == make_rational(twice, 2) * a.rational_part);
  }
}

TEST_CASE("t_g examples") {
  AsymptoticConstants c;
  const SqrtPiScalar t1 = c.tg(1);
  CHECK(t1.rational_part == make_rational(1, 24));
  CHECK(t1.pi_power == PiPower::zero);
  CHECK(t1.to_string() == "1/24");

  const SqrtPiScalar t2 = c.tg(2);
  CHECK(t2.rational_part == make_rational(7, 4320));
  CHECK(t2.pi_power == PiPower::minus_half);
  CHECK(t2.to_string() == "7/(4320*sqrt(pi))");
  CHECK(t2.to_double() == doctest::Approx(7.0 / (4320.0 * std::sqrt(M_PI))).epsilon(1e-14));
  CHECK(t2.decimal(10) == "9.141960845e-04");

  const SqrtPiScalar t3 = c.tg(3);
  CHECK(t3.pi_power == PiPower::zero);
  CHECK(t3.rational_part == c.tau(3) / (Rational(8192) * 720));

  for (int g = 1; g <= 9; ++g) CHECK((c.tg(g).pi_power == PiPower::zero) == (g % 2 == 1));
}

TEST_CASE("tau from the pole data of R_g") {
  GenusSeries series;
  AsymptoticConstants c;
  CHECK(tau_from_rg(series, 1) == make_rational(1, 3));
  CHECK(tau_from_rg(series, 2) == make_rational(49, 18));
  for (int g = 1; g <= 5; ++g) CHECK(tau_from_rg(series, g) == c.tau(g));
}

TEST_CASE("the two closed forms of t_g agree") {
  GenusSeries series;
  AsymptoticConstants c;
  for (int g = 1; g <= 5; ++g) {
    const Rational alpha = rg_report(series.rg(g)).alpha.back();
    CHECK(tg_from_alpha(g, alpha) == c.tg(g));
  }
  // Symbolically, with alpha standing for tau / (5g - 3).
  for (int g = 1; g <= 8; ++g) CHECK(tg_from_alpha(g, c.tau(g) / (5 * g - 3)) == c.tg(g));
}

TEST_CASE("asymptotic ratio trends toward 1") {
  RecurrenceEngine engine;
  AsymptoticConstants c;
  CHECK_THROWS_AS(asymptotic_ratio(engine, c, 0, 10), std::invalid_argument);
  const double r10 = asymptotic_ratio(engine, c, 1, 10);
  CHECK(std::isfinite(r10));
  CHECK(r10 > 0);
  CHECK(std::fabs(asymptotic_ratio(engine, c, 1, 100) - 1.0) < 0.25);
  for (int g = 1; g <= 2; ++g) {
    const double a = std::fabs(asymptotic_ratio(engine, c, g, 50) - 1.0);
    const double b = std::fabs(asymptotic_ratio(engine, c, g, 100) - 1.0);
    const double d = std::fabs(asymptotic_ratio(engine, c, g, 200) - 1.0);
    CAPTURE(g);
    CHECK(b < a);
    CHECK(d < b);
  }
}
