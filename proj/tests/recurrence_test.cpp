#include <vector>

#include "doctest.h"
#include "rootmaps/errors.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;

namespace {

FacePolynomial xpoly(std::vector<Integer> c) { return FacePolynomial(std::move(c), Var::x); }

// Faces-refined recurrence, written directly with rationals:
// (n+1)/6 Q_g^{n,f} = (2n-1)/3 (Q_g^{n-1,f} + Q_g^{n-1,f-1})
//   + (2n-3)(2n-2)(2n-1)/12 Q_{g-1}^{n-2,f}
//   + 1/2 sum (2k-1)(2l-1) Q_i^{k-1,u} Q_j^{l-1,v}
class FaceRefinedCounts {
 public:
  explicit FaceRefinedCounts(int nmax) : nmax_(nmax) {
    const int gmax = nmax / 2;
    q_.assign(static_cast<std::size_t>(gmax + 1),
              std::vector<std::vector<Rational>>(static_cast<std::size_t>(nmax + 1),
                                                 std::vector<Rational>(static_cast<std::size_t>(nmax + 2))));
    q_[0][0][1] = 1;
    for (int n = 1; n <= nmax; ++n)
      for (int g = 0; g <= gmax; ++g)
        for (int f = 1; f <= n + 1; ++f) {
          Rational acc = make_rational(2 * n - 1, 3) * (at(g, n - 1, f) + at(g, n - 1, f - 1));
          acc += make_rational((2 * n - 3) * (2 * n - 2) * (2 * n - 1), 12) * at(g - 1, n - 2, f);
          Rational conv;
          for (int k = 1; k < n; ++k)
            for (int u = 1; u < f; ++u)
              for (int i = 0; i <= g; ++i)
                conv += Rational((2 * k - 1) * (2 * (n - k) - 1)) * at(i, k - 1, u) * at(g - i, n - k - 1, f - u);
          acc += conv / 2;
          q_[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)][static_cast<std::size_t>(f)] =
              acc * make_rational(6, n + 1);
        }
  }

  Rational at(int g, int n, int f) const {
    if (g < 0 || n < 0 || f < 0 || g >= static_cast<int>(q_.size()) || n > nmax_ || f > n + 1) return 0;
    return q_[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)][static_cast<std::size_t>(f)];
  }

 private:
  int nmax_;
  std::vector<std::vector<std::vector<Rational>>> q_;
};

}  // namespace

TEST_CASE("q_count examples") {
  RecurrenceEngine e;
  CHECK(e.q_count(0, 0) == 1);
  CHECK(e.q_count(1, 0) == 0);
  CHECK(e.q_count(0, 2) == 9);
  CHECK(e.q_count(1, 3) == 20);
  CHECK(e.q_count(1, 5) == 4280);
  CHECK(e.q_count(2, 4) == 21);
  CHECK(e.q_count(3, 5) == 0);
  CHECK(e.q_count(-1, 3) == 0);
  CHECK(e.q_count(0, -1) == 0);
}

TEST_CASE("q_poly and q_count_faces examples") {
  RecurrenceEngine e;
  CHECK(e.q_poly(0, 0) == xpoly({0, 1}));
  CHECK(e.q_poly(1, 0).is_zero());
  CHECK(e.q_poly(0, 1) == xpoly({0, 1, 1}));
  CHECK(e.q_poly(0, 2) == xpoly({0, 2, 5, 2}));
  CHECK(e.q_poly(1, 2) == xpoly({0, 1}));
  CHECK(e.q_count_faces(0, 0, 1) == 1);
  CHECK(e.q_count_faces(0, 2, 2) == 5);
  CHECK(e.q_count_faces(1, 2, 1) == 1);
  CHECK(e.q_count_faces(0, 2, 0) == 0);
}

TEST_CASE("hz examples") {
  RecurrenceEngine e;
  CHECK(e.hz(0, 4) == 14);
  CHECK(e.hz(1, 3) == 10);
  CHECK(e.hz(2, 4) == 21);
  CHECK(e.hz(2, 3) == 0);
  const Integer catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) CHECK(e.hz(0, n) == catalan[n]);
}

TEST_CASE("m_count examples") {
  RecurrenceEngine e;
  CHECK(e.m_count(0, 1, 1) == 1);
  CHECK(e.m_count(0, 2, 1) == 1);
  CHECK(e.m_count(1, 1, 1) == 1);
  CHECK(e.m_count(0, 0, 3) == 0);
  CHECK(e.m_count(2, 1, 1) == 21);
}

TEST_CASE("genus_poly examples") {
  RecurrenceEngine e;
  CHECK(e.genus_poly(0).by_genus == std::vector<FacePolynomial>{xpoly({0, 1})});
  CHECK(e.genus_poly(1).by_genus == std::vector<FacePolynomial>{xpoly({0, 1, 1})});
  CHECK(e.genus_poly(2).by_genus == std::vector<FacePolynomial>{xpoly({0, 2, 5, 2}), xpoly({0, 1})});
}

TEST_CASE("table_range") {
  RecurrenceEngine e;
  const auto rows = e.table_range(1, 3);
  REQUIRE(rows.size() == 6);
  const int expected[][3] = {{0, 0, 1}, {0, 1, 2}, {0, 2, 9}, {1, 2, 1}, {0, 3, 54}, {1, 3, 20}};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].genus == expected[k][0]);
    CHECK(rows[k].edges == expected[k][1]);
    CHECK(rows[k].count == expected[k][2]);
    CHECK(!rows[k].faces.has_value());
  }
  const auto single = e.table_range(0, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].count == 1);
  const auto wide = e.table_range(5, 4, true);
  CHECK(wide.back().genus == 2);
  CHECK(wide.back().count == 21);
  CHECK(*wide.back().faces == xpoly({0, 21}));
}

TEST_CASE("faces-refined recurrence agrees with the tables") {
  RecurrenceEngine e;
  const int nmax = 9;
  const FaceRefinedCounts ref(nmax);
  for (int n = 0; n <= nmax; ++n)
    for (int g = 0; 2 * g <= n; ++g)
      for (int f = 0; f <= n + 2; ++f) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(f);
        CHECK(Rational(e.q_count_faces(g, n, f)) == ref.at(g, n, f));
      }
}

TEST_CASE("specialization chain and support") {
  RecurrenceEngine e;
  for (int n = 0; n <= 14; ++n) {
    const GenusPolynomial h = e.genus_poly(n);
    for (int g = 0; g <= n / 2 + 1; ++g) {
      const FacePolynomial p = e.q_poly(g, n);
      CHECK(p.evaluate(1) == e.q_count(g, n));
      Integer sum;
      for (int f = 0; f <= n + 2; ++f) sum += e.q_count_faces(g, n, f);
      CHECK(sum == e.q_count(g, n));
      CHECK(h.coeff(g) == p);
      CHECK((e.q_count(g, n) > 0) == (2 * g <= n));
      if (!p.is_zero()) {
        CHECK(p.valuation() == 1);
        CHECK(p.degree() == n + 1 - 2 * g);
        for (int f = 1; f <= n + 1 - 2 * g; ++f) CHECK(p.coeff(f) == p.coeff(n + 2 - 2 * g - f));
      }
    }
  }
}

TEST_CASE("vertex/face duality and M = Q identity") {
  RecurrenceEngine e;
  for (int g = 0; g <= 3; ++g)
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; i + j + 2 * g - 2 <= 14; ++j) {
        CHECK(e.m_count(g, i, j) == e.m_count(g, j, i));
        CHECK(e.m_count(g, i, j) == e.q_count_faces(g, i + j + 2 * g - 2, j));
      }
}

TEST_CASE("linear one-face recurrence agrees with the f = 1 slice") {
  RecurrenceEngine e;
  for (int n = 0; n <= 16; ++n)
    for (int g = 0; g <= 8; ++g) CHECK(e.hz(g, n) == e.q_count_faces(g, n, 1));
}

TEST_CASE("planar column matches the planar generating function") {
  RecurrenceEngine e;
  const TruncatedSeries q0 = genus_series_in_t(r0(), 25);
  for (int n = 0; n <= 25; ++n) CHECK(Rational(e.q_count(0, n)) == q0[n]);
}

TEST_CASE("threaded fill gives the same table") {
  RecurrenceEngine serial(1), threaded(4);
  serial.q_count(6, 40);
  threaded.q_count(6, 40);
  CHECK(serial.counts().columns() == threaded.counts().columns());
}

TEST_CASE("restored tables are used as given") {
  RecurrenceEngine e;
  e.q_count(1, 4);
  auto cols = e.counts().columns();
  cols[3][1] += 1;
  RecurrenceEngine other;
  other.counts().restore(e.counts().genus_cap(), cols);
  CHECK(other.q_count(1, 3) == 21);
}
