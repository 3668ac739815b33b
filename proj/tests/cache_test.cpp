#include "doctest.h"
#include "rootmaps/asymptotics.hpp"
#include "rootmaps/cache.hpp"
#include "rootmaps/errors.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

namespace {

struct World {
  RecurrenceEngine engine;
  GenusSeries series;
  AsymptoticConstants constants;
  CacheState state() { return {engine, series, constants}; }
};

}  // namespace

TEST_CASE("cache round trip is byte-identical") {
  World a;
  a.engine.q_count(3, 12);
  a.engine.q_poly(2, 9);
  a.engine.m_count(1, 3, 4);
  a.series.rg(3);
  a.constants.tau(4);
  const std::string first = dump_cache(a.state());

  World b;
  load_cache(first, b.state());
  CHECK(dump_cache(b.state()) == first);
  CHECK(b.engine.q_count(3, 12) == a.engine.q_count(3, 12));
  CHECK(b.engine.q_poly(2, 9) == a.engine.q_poly(2, 9));
  CHECK(b.engine.m_count(1, 3, 4) == a.engine.m_count(1, 3, 4));
  CHECK(b.series.computed_genus() == 3);
  CHECK(b.series.rg(3).form == a.series.rg(3).form);
  CHECK(b.constants.computed() == a.constants.computed());

  // Reloaded tables keep extending correctly.
  RecurrenceEngine fresh;
  CHECK(b.engine.q_count(4, 14) == fresh.q_count(4, 14));
  CHECK(b.engine.m_count(2, 4, 4) == fresh.m_count(2, 4, 4));
}

TEST_CASE("empty state round trips") {
  World a;
  const std::string text = dump_cache(a.state());
  World b;
  load_cache(text, b.state());
  CHECK(dump_cache(b.state()) == text);
}

TEST_CASE("version mismatch and malformed documents are refused") {
  World a;
  a.engine.q_count(1, 4);
  std::string text = dump_cache(a.state());
  const std::string needle = "\"schemaVersion\":1";
  REQUIRE(text.find(needle) != std::string::npos);
  std::string wrong = text;
  wrong.replace(wrong.find(needle), needle.size(), "\"schemaVersion\":2");
  World b;
  CHECK_THROWS_AS(load_cache(wrong, b.state()), CacheError);
  CHECK_THROWS_AS(load_cache("{not json", b.state()), CacheError);
  CHECK_THROWS_AS(load_cache("{\"schemaVersion\":1}", b.state()), CacheError);
}

TEST_CASE("stored tau values are checked") {
  World a;
  a.constants.tau(3);
  std::string text = dump_cache(a.state());
  const std::string needle = "\"49/18\"";
  REQUIRE(text.find(needle) != std::string::npos);
  text.replace(text.find(needle), needle.size(), "\"50/18\"");
  World b;
  CHECK_THROWS_AS(load_cache(text, b.state()), ConsistencyError);
}
