#include "doctest.h"
#include "rootmaps/bivariate.hpp"
#include "rootmaps/errors.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

TEST_CASE("m_series_pq leading terms") {
  RecurrenceEngine engine;
  const BiSeries m0 = m_series_pq(engine, 0, 4);
  CHECK(m0.coeff(1, 1) == 1);
  CHECK(m0.coeff(1, 0) == 0);
  CHECK(m0.coeff(0, 0) == 0);
  const BiSeries m1 = m_series_pq(engine, 1, 4);
  CHECK(m1.coeff(1, 1) == 1);
}

TEST_CASE("P_1 is the constant 1") {
  RecurrenceEngine engine;
  const BivariateRationalRecord rec = fit_pg(engine, 1);
  CHECK(rec.total_degree == 0);
  CHECK(rec.pg.coeff(0, 0) == 1);
  CHECK(rec.system.unknowns == 1);
  CHECK(rec.system.rank == 1);
  CHECK(rec.fit_degree == 2);
  const ValidationReport rep = validate_pg(engine, rec, 6);
  CHECK(rep.checked_degree == 8);
}

TEST_CASE("fitted P_g are symmetric, bounded and validated beyond the fit range") {
  RecurrenceEngine engine;
  for (int g = 1; g <= 3; ++g) {
    CAPTURE(g);
    const BivariateRationalRecord rec = fit_pg(engine, g);
    CHECK(rec.total_degree <= 6 * g - 6);
    CHECK(rec.system.unknowns == (6 * g - 4) * (6 * g - 5) / 2);
    CHECK(rec.system.rank == rec.system.unknowns);
    for (int d = 0; d <= 6 * g - 6; ++d)
      for (int a = 0; a <= d; ++a) CHECK(rec.pg.coeff(a, d - a) == rec.pg.coeff(d - a, a));
    CHECK(validate_pg(engine, rec, 2).checked_degree == 6 * g - 2);
  }
}

TEST_CASE("surplus layers stay consistent") {
  RecurrenceEngine engine;
  const BivariateRationalRecord base = fit_pg(engine, 2);
  const BivariateRationalRecord wide = fit_pg(engine, 2, {.surplus_layers = 3});
  CHECK(wide.pg == base.pg);
  CHECK(wide.system.equations > base.system.equations);
}

TEST_CASE("equation order does not change the solution") {
  RecurrenceEngine engine;
  const BivariateRationalRecord base = fit_pg(engine, 2);
  for (unsigned seed : {1u, 17u, 123u}) {
    const BivariateRationalRecord shuffled = fit_pg(engine, 2, {.surplus_layers = 0, .shuffle_seed = seed});
    CHECK(shuffled.pg == base.pg);
  }
}

TEST_CASE("a corrupted P_1 fails validation early") {
  RecurrenceEngine engine;
  BivariateRationalRecord rec = fit_pg(engine, 1);
  rec.pg.coeff(0, 0) = 2;
  try {
    validate_pg(engine, rec, 4);
    FAIL("corrupted record validated");
  } catch (const ValidationMismatch& e) {
    CHECK(e.i() + e.j() <= 4);
  }
}

TEST_CASE("fit_pg rejects genus 0") {
  RecurrenceEngine engine;
  CHECK_THROWS_AS(fit_pg(engine, 0), std::invalid_argument);
}
