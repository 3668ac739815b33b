// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "rootmaps/asymptotics.hpp"
#include "rootmaps/bivariate.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/oracle.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Outcome oracle_equivalence() {
  Outcome o;
  {
    RecurrenceEngine engine;
    const auto start = Clock::now();
    const VerifyReport rep = verify_all(engine, 4, worker_count());
    const double t = seconds_since(start);
    if (const CheckResult* bad = rep.first_failure()) o.require(false, bad->name + ": " + bad->detail);
    o.require(t < 60, "n <= 4 took " + std::to_string(t) + " s");
  }
  RecurrenceEngine engine;
  const auto start = Clock::now();
  const OracleCensus census = census_rooted_maps(5, worker_count());
  const int n = 5;
  for (int g = 0; 2 * g <= n; ++g) {
    const std::string at = " g=" + std::to_string(g) + " n=5";
    o.require(census.genus_total(g) == engine.q_count(g, n), "q_count" + at);
    o.require(census.face_polynomial(g) == engine.q_poly(g, n), "q_poly" + at);
    for (int v = 1; v <= n + 1 - 2 * g; ++v) {
      const int f = n + 2 - 2 * g - v;
      const auto it = census.counts.find({g, v, f});
      o.require((it == census.counts.end() ? Integer(0) : it->second) == engine.m_count(g, v, f), "m_count" + at);
    }
    const auto one = census.counts.find({g, n + 1 - 2 * g, 1});
    o.require((one == census.counts.end() ? Integer(0) : one->second) == engine.hz(g, n), "hz" + at);
  }
  o.require(census.max_genus() <= n / 2, "genus above n/2 at n=5");
  const double t = seconds_since(start);
  o.require(t < 600, "n = 5 took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "n <= 4 via verify_all, n = 5 in " + std::to_string(t) + " s";
  return o;
}

Outcome tutte_bijection() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const OracleCensus maps = census_rooted_maps(n);
    const std::vector<int> profile(static_cast<std::size_t>(n), 2);
    std::map<int, std::map<int, Integer>> by_genus;
    for (const auto& [key, count] : census_bipartite(2 * n, profile, worker_count()))
      by_genus[bipartite_genus(2 * n, n, key.second)][key.first] += count;
    for (int g = 0; 2 * g <= n; ++g) {
      Integer total;
      for (const auto& [white, count] : by_genus[g]) {
        total += count;
        const auto it = maps.counts.find({g, n + 2 - 2 * g - white, white});
        o.require(it != maps.counts.end() && it->second == count,
                  "white-vertex distribution differs at g=" + std::to_string(g) + " n=" + std::to_string(n));
      }
      o.require(total == maps.genus_total(g), "genus total differs at g=" + std::to_string(g) + " n=" + std::to_string(n));
    }
    o.require(static_cast<int>(by_genus.size()) == n / 2 + 1, "unexpected genus in quadrangulations");
  }
  return o;
}

Outcome planar_column() {
  Outcome o;
  RecurrenceEngine engine;
  const int order = 200;
  const TruncatedSeries T = tree_series(order);
  TruncatedSeries t(order);
  t[1] = 1;
  const TruncatedSeries q0 = T - t * T.pow(3);
  for (int n = 0; n <= order; ++n)
    o.require(Rational(engine.q_count(0, n)) == q0[n], "mismatch at n=" + std::to_string(n));
  return o;
}

Outcome harer_zagier() {
  Outcome o;
  RecurrenceEngine engine;
  for (int n = 0; n <= 100; ++n)
    for (int g = 0; 2 * g <= n + 1; ++g)
      o.require(engine.hz(g, n) == engine.q_count_faces(g, n, 1),
                "hz vs f=1 slice at g=" + std::to_string(g) + " n=" + std::to_string(n));
  for (int n = 0; n <= 200; ++n) {
    Integer catalan = binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_divexact_ui(catalan.get_mpz_t(), catalan.get_mpz_t(), static_cast<unsigned long>(n + 1));
    o.require(engine.hz(0, n) == catalan, "Catalan mismatch at n=" + std::to_string(n));
  }
  return o;
}

Outcome cross_route(GenusSeries& series) {
  Outcome o;
  RecurrenceEngine engine;
  for (int g = 0; g <= 8; ++g) {
    const TruncatedSeries q = genus_series_in_t(series.rg(g), 40);
    for (int n = 0; n <= 40; ++n)
      o.require(q[n] == Rational(engine.q_count(g, n)), "g=" + std::to_string(g) + " n=" + std::to_string(n));
  }
  return o;
}

Outcome ansatz_bounds(GenusSeries& series) {
  Outcome o;
  const auto start = Clock::now();
  for (int g = 1; g <= 10; ++g) {
    const GenusSeriesRecord& rec = series.rg(g);
    const std::string at = " for g=" + std::to_string(g);
    o.require(rec.form.pole_order(Root::two) <= 5 * g - 3, "order at 2" + at);
    o.require(rec.form.pole_order(Root::minus_two) <= 3 * g - 2, "order at -2" + at);
    o.require(rec.form.pole_order(Root::zero) == 0 && rec.form.pole_order(Root::one) == 0, "extra pole" + at);
    o.require(rec.form.polynomial_part().degree() <= 0, "polynomial part" + at);
  }
  const double t = seconds_since(start);
  o.require(t < 300, "rg(10) took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "rg(1..10) in " + std::to_string(t) + " s";
  return o;
}

Outcome asymptotic_constants(GenusSeries& series) {
  Outcome o;
  AsymptoticConstants c;
  for (int g = 1; g <= 8; ++g) o.require(tau_from_rg(series, g) == c.tau(g), "tau mismatch at g=" + std::to_string(g));
  const SqrtPiScalar t1 = c.tg(1);
  o.require(t1.pi_power == PiPower::zero && t1.rational_part == make_rational(1, 24), "t_1 = " + t1.to_string());
  const SqrtPiScalar t2 = c.tg(2);
  o.require(t2.to_string() == "7/(4320*sqrt(pi))", "t_2 = " + t2.to_string());
  return o;
}

Outcome bivariate_form() {
  Outcome o;
  RecurrenceEngine engine;
  std::string degrees;
  for (int g = 1; g <= 4; ++g) {
    const BivariateRationalRecord rec = fit_pg(engine, g);
    const std::string at = " for g=" + std::to_string(g);
    o.require(rec.total_degree <= 6 * g - 6, "degree bound" + at);
    for (int d = 0; d <= 6 * g - 6; ++d)
      for (int a = 0; a <= d; ++a) o.require(rec.pg.coeff(a, d - a) == rec.pg.coeff(d - a, a), "symmetry" + at);
    validate_pg(engine, rec, 2);
    degrees += (degrees.empty() ? "" : ",") + std::to_string(rec.total_degree);
  }
  if (o.pass) o.detail = "degrees " + degrees;
  return o;
}

Outcome tutte_hexa() {
  Outcome o;
  RecurrenceEngine engine;
  verify_tutte_hexa(engine, 2, worker_count());
  verify_tutte_hexa(engine, 3, worker_count());
  return o;
}

Outcome performance() {
  Outcome o;
  {
    RecurrenceEngine engine(1);
    const auto start = Clock::now();
    const auto rows = engine.table_range(100, 200);
    const double t = seconds_since(start);
    o.require(rows.size() == static_cast<std::size_t>(101 * 101), "row count " + std::to_string(rows.size()));
    o.require(t < 600, "Q table took " + std::to_string(t) + " s");
    o.detail = "Q table n<=200 in " + std::to_string(t) + " s";
  }
  {
    RecurrenceEngine engine(1);
    const auto start = Clock::now();
    engine.hz(50, 2000);
    const double t = seconds_since(start);
    o.require(t < 60, "hz(50, n<=2000) took " + std::to_string(t) + " s");
    if (o.pass) o.detail += ", hz(50, n<=2000) in " + std::to_string(t) + " s";
  }
  return o;
}

}  // namespace

int main() {
  GenusSeries series;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence (n <= 4, n = 5)", oracle_equivalence},
      {"quadrangulation bijection (n <= 3)", tutte_bijection},
      {"planar column (n <= 200)", planar_column},
      {"one-face consistency (n <= 100) and Catalan (n <= 200)", harer_zagier},
      {"genus series vs count table (g <= 8, n <= 40)", [&] { return cross_route(series); }},
      {"pole bounds of R_g (g <= 10, under 5 min)", [&] { return ansatz_bounds(series); }},
      {"asymptotic constants (g <= 8)", [&] { return asymptotic_constants(series); }},
      {"bivariate rational form (g <= 4)", bivariate_form},
      {"hexagon identity (n = 2, 3)", tutte_hexa},
      {"performance (Q table n <= 200, hz(50, n <= 2000))", performance},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s [%.2f s]%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), t,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
