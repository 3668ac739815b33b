#include "doctest.h"
#include "rootmaps/errors.hpp"
#include "rootmaps/oracle.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

TEST_CASE("dart permutations") {
  const DartPermutation p({2, 0, 1, 4, 3, 5});
  CHECK(p.cycles() == std::vector<std::vector<int>>{{0, 2, 1}, {3, 4}, {5}});
  CHECK(p.cycle_type() == std::vector<int>{3, 2, 1});
  CHECK(p.cycle_count() == 3);
  CHECK(p * p.inverse() == DartPermutation::identity(6));
  CHECK_THROWS_AS(DartPermutation({0, 0}), std::invalid_argument);

  const DartPermutation alpha = DartPermutation::fixed_involution(3);
  CHECK(alpha.cycle_type() == std::vector<int>{2, 2, 2});
  const std::vector<DartPermutation> disconnected{DartPermutation::identity(6), alpha};
  CHECK(!is_transitive(disconnected));
  const std::vector<DartPermutation> connected{p, alpha};
  CHECK(is_transitive(connected));
}

TEST_CASE("one edge by hand") {
  const OracleCensus c = census_rooted_maps(1);
  CHECK(c.counts.size() == 2);
  CHECK(c.counts.at({0, 2, 1}) == 1);
  CHECK(c.counts.at({0, 1, 2}) == 1);
}

TEST_CASE("genus totals for two and three edges") {
  const OracleCensus c2 = census_rooted_maps(2);
  CHECK(c2.genus_total(0) == 9);
  CHECK(c2.genus_total(1) == 1);
  const OracleCensus c3 = census_rooted_maps(3, 2);
  CHECK(c3.genus_total(0) == 54);
  CHECK(c3.genus_total(1) == 20);
  CHECK(c3.total() == 74);
  for (const auto& [k, v] : c3.counts) CHECK(k.vertices - 3 + k.faces == 2 - 2 * k.genus);
}

TEST_CASE("bipartite censuses") {
  const std::vector<int> two{2};
  const BipartiteCensus m2 = census_bipartite(2, two);
  CHECK(m2 == BipartiteCensus{{{1, 3}, 1}, {{2, 3}, 1}});

  const std::vector<int> quad{2, 2};
  std::map<int, std::map<int, Integer>> by_genus;
  for (const auto& [key, count] : census_bipartite(4, quad)) by_genus[bipartite_genus(4, 2, key.second)][key.first] += count;
  CHECK(by_genus[0] == std::map<int, Integer>{{1, 2}, {2, 5}, {3, 2}});
  CHECK(by_genus[1] == std::map<int, Integer>{{1, 1}});

  const std::vector<int> bad{2, 2};
  CHECK_THROWS_AS(census_bipartite(5, bad), std::invalid_argument);
}

TEST_CASE("hexagon identity") {
  RecurrenceEngine engine;
  const auto x2 = hexagon_polynomials(2);
  CHECK(x2.size() == 2);
  CHECK(x2.at(1) == FacePolynomial(std::vector<Integer>{0, 1}, Var::x));
  CHECK_NOTHROW(verify_tutte_hexa(engine, 2));
  CHECK_NOTHROW(verify_tutte_hexa(engine, 3));

  auto perturbed = hexagon_polynomials(3);
  std::vector<Integer> c(perturbed[0].coefficients().begin(), perturbed[0].coefficients().end());
  c[1] += 1;
  perturbed[0] = FacePolynomial(c, Var::x);
  CHECK_THROWS_AS(check_tutte_hexa(engine, 3, perturbed), IdentityViolation);
}

TEST_CASE("oracle agrees with every table") {
  RecurrenceEngine engine;
  const VerifyReport one = verify_all(engine, 1);
  CHECK(one.all_passed());
  const VerifyReport rep = verify_all(engine, 4, 2);
  CHECK(rep.all_passed());
  CHECK(rep.first_failure() == nullptr);
}

TEST_CASE("a corrupted table is named") {
  RecurrenceEngine engine;
  engine.q_count(1, 3);
  auto cols = engine.counts().columns();
  cols[3][1] = 19;
  engine.counts().restore(engine.counts().genus_cap(), cols);
  const VerifyReport rep = verify_all(engine, 3);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "q_count g=1 n=3");
}
