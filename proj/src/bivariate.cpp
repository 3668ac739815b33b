#include "rootmaps/bivariate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rootmaps/errors.hpp"
#include "rootmaps/recurrence.hpp"

namespace rootmaps {

namespace {

constexpr auto pq = VarPair::pq;
constexpr auto xy = VarPair::xy;

BiSeries p_var(int order) { return BiSeries::monomial(1, 1, 0, order, pq); }
BiSeries q_var(int order) { return BiSeries::monomial(1, 0, 1, order, pq); }

// pq (1 - p - q)
BiSeries numerator_prefactor(int order) {
  BiSeries f(order, pq);
  if (order >= 2) f.coeff(1, 1) = 1;
  if (order >= 3) {
    f.coeff(2, 1) = -1;
    f.coeff(1, 2) = -1;
  }
  return f;
}

// One sparse equation  sum coeffs[k] u_k = rhs  over the integers.
struct SparseRow {
  std::map<int, Integer> coeffs;
  Integer rhs;
};

void remove_content(SparseRow& row) {
  Integer g = row.rhs;
  for (const auto& [col, c] : row.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& [col, c] : row.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(row.rhs.get_mpz_t(), row.rhs.get_mpz_t(), g.get_mpz_t());
}

// row <- pivot[c] * row - row[c] * pivot, clearing column c.
void eliminate(SparseRow& row, const SparseRow& pivot, int col) {
  const Integer a = pivot.coeffs.at(col);
  const Integer b = row.coeffs.at(col);
  for (auto& [k, c] : row.coeffs) c *= a;
  row.rhs = row.rhs * a - pivot.rhs * b;
  for (const auto& [k, c] : pivot.coeffs) {
    Integer& slot = row.coeffs[k];
    slot -= b * c;
  }
  std::erase_if(row.coeffs, [](const auto& kv) { return kv.second == 0; });
  remove_content(row);
}

// Fraction-free echelon reduction followed by back substitution.
std::vector<Rational> solve_exact(std::vector<SparseRow> rows, int unknowns, LinearSystemReport& report) {
  report.unknowns = unknowns;
  report.equations = static_cast<int>(rows.size());
  std::vector<int> pivot_row(static_cast<std::size_t>(unknowns), -1);
  std::vector<SparseRow> pivots;
  for (SparseRow& row : rows) {
    remove_content(row);
    while (!row.coeffs.empty()) {
      const int lead = row.coeffs.begin()->first;
      const int p = pivot_row[static_cast<std::size_t>(lead)];
      if (p < 0) break;
      eliminate(row, pivots[static_cast<std::size_t>(p)], lead);
    }
    if (row.coeffs.empty()) {
      if (row.rhs != 0) throw InconsistentSystem("linear system for P_g has no exact solution");
      continue;
    }
    pivot_row[static_cast<std::size_t>(row.coeffs.begin()->first)] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
  }
  report.rank = static_cast<int>(pivots.size());
  if (report.rank < unknowns) throw UnderdeterminedSystem(unknowns, report.rank);

  std::vector<Rational> x(static_cast<std::size_t>(unknowns));
  for (int col = unknowns - 1; col >= 0; --col) {
    const SparseRow& row = pivots[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(col)])];
    Rational acc(row.rhs);
    for (auto it = std::next(row.coeffs.begin()); it != row.coeffs.end(); ++it)
      acc -= Rational(it->second) * x[static_cast<std::size_t>(it->first)];
    x[static_cast<std::size_t>(col)] = acc / Rational(row.coeffs.begin()->second);
  }
  return x;
}

// Unknown u_{a,b} (a + b <= top) gets its column by decreasing total degree,
// so that each equation's leading column is its highest-degree unknown.
class MonomialColumns {
 public:
  explicit MonomialColumns(int top) : top_(top) {
    for (int d = top; d >= 0; --d)
      for (int a = 0; a <= d; ++a) cols_.push_back({a, d - a});
  }
  int count() const { return static_cast<int>(cols_.size()); }
  int top() const { return top_; }
  std::pair<int, int> monomial(int col) const { return cols_[static_cast<std::size_t>(col)]; }
  int column(int a, int b) const {
    const int d = a + b;
    const int before = (top_ - d) * (top_ + d + 3) / 2;  // monomials with degree > d
    return before + a;
  }

 private:
  int top_;
  std::vector<std::pair<int, int>> cols_;
};

}  // namespace

BiSeries rational_form_denominator(int order) {
  const BiSeries p = p_var(order);
  const BiSeries q = q_var(order);
  const BiSeries lin = BiSeries::constant(1, order, pq) - p * Rational(2) - q * Rational(2);
  return lin * lin - p * q * Rational(4);
}

BiSeries m_series_pq(RecurrenceEngine& engine, int genus, int order) {
  if (genus < 0 || order < 0) throw std::invalid_argument("genus and order must be nonnegative");
  BiSeries m(order, xy);
  for (int d = 2; d <= order; ++d)
    for (int i = 1; i < d; ++i) {
      m.coeff(i, d - i) = Rational(engine.m_count(genus, i, d - i));
    }
  const BiSeries p = p_var(order);
  const BiSeries q = q_var(order);
  const BiSeries one = BiSeries::constant(1, order, pq);
  const BiSeries x = p * (one - p - q * Rational(2));
  const BiSeries y = q * (one - p * Rational(2) - q);
  return BiSeries::substitute(m, x, y);
}

BivariateRationalRecord fit_pg(RecurrenceEngine& engine, int genus, const FitOptions& options) {
  if (genus < 1) throw std::invalid_argument("fit_pg needs g >= 1");
  if (options.surplus_layers < 0) throw std::invalid_argument("surplus layers must be nonnegative");
  const int top = 6 * genus - 6;
  const int fit = 6 * genus - 4 + options.surplus_layers;
  const MonomialColumns cols(top);

  // m_series * den^(5g-3) = pq(1-p-q) P_g, coefficient by coefficient.
  const BiSeries data = m_series_pq(engine, genus, fit) *
                        rational_form_denominator(fit).pow(static_cast<unsigned>(5 * genus - 3));

  std::vector<SparseRow> rows;
  for (int d = 0; d <= fit; ++d)
    for (int c = 0; c <= d; ++c) {
      const int e = d - c;
      SparseRow row;
      const Rational& v = data.coeff(c, e);
      if (v.get_den() != 1) throw NonIntegerResult("rational-form data has a non-integral coefficient");
      row.rhs = v.get_num();
      // coefficient of p^c q^e in pq(1-p-q) sum u_{a,b} p^a q^b
      auto add = [&](int a, int b, long s) {
        if (a < 0 || b < 0 || a + b > top) return;
        row.coeffs[cols.column(a, b)] += s;
      };
      add(c - 1, e - 1, 1);
      add(c - 2, e - 1, -1);
      add(c - 1, e - 2, -1);
      std::erase_if(row.coeffs, [](const auto& kv) { return kv.second == 0; });
      rows.push_back(std::move(row));
    }
  if (options.shuffle_seed != 0) {
    std::mt19937 rng(options.shuffle_seed);
    std::shuffle(rows.begin(), rows.end(), rng);
  }

  BivariateRationalRecord rec;
  rec.genus = genus;
  rec.fit_degree = fit;
  const std::vector<Rational> u = solve_exact(std::move(rows), cols.count(), rec.system);
  rec.pg = BiSeries(top, pq);
  for (int col = 0; col < cols.count(); ++col) {
    const auto [a, b] = cols.monomial(col);
    rec.pg.coeff(a, b) = u[static_cast<std::size_t>(col)];
    if (u[static_cast<std::size_t>(col)] != 0) rec.total_degree = std::max(rec.total_degree, a + b);
  }
  for (int d = 0; d <= top; ++d)
    for (int a = 0; a <= d; ++a)
      if (rec.pg.coeff(a, d - a) != rec.pg.coeff(d - a, a))
        throw ConsistencyError("P_" + std::to_string(genus) + " is not symmetric in p and q");
  return rec;
}

BiSeries closed_form_pq(const BivariateRationalRecord& record, int order) {
  BiSeries pg(order, pq);
  for (int d = 0; d <= std::min(order, record.pg.degree()); ++d)
    for (int a = 0; a <= d; ++a) pg.coeff(a, d - a) = record.pg.coeff(a, d - a);
  const BiSeries den = rational_form_denominator(order).pow(static_cast<unsigned>(5 * record.genus - 3));
  return numerator_prefactor(order) * pg * den.inverse();
}

BiSeries closed_form_xy(const BivariateRationalRecord& record, int order) {
  // Invert x = p - p^2 - 2pq, y = q - 2pq - q^2 by iterating
  // p = x + p^2 + 2pq, q = y + 2pq + q^2; each pass fixes one more degree.
  const BiSeries x = BiSeries::monomial(1, 1, 0, order, xy);
  const BiSeries y = BiSeries::monomial(1, 0, 1, order, xy);
  BiSeries p = x;
  BiSeries q = y;
  for (int pass = 1; pass < order; ++pass) {
    const BiSeries pq2 = p * q * Rational(2);
    BiSeries np = x + p * p + pq2;
    BiSeries nq = y + pq2 + q * q;
    p = std::move(np);
    q = std::move(nq);
  }
  return BiSeries::substitute(closed_form_pq(record, order), p, q);
}

ValidationReport validate_pg(RecurrenceEngine& engine, const BivariateRationalRecord& record, int extra_order) {
  if (extra_order < 0) throw std::invalid_argument("extra order must be nonnegative");
  ValidationReport rep;
  rep.checked_degree = record.fit_degree + extra_order;
  const BiSeries closed = closed_form_xy(record, rep.checked_degree);
  for (int d = 0; d <= rep.checked_degree; ++d)
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      const Integer expected =
          (i >= 1 && j >= 1) ? engine.m_count(record.genus, i, j) : Integer(0);
      const Rational& got = closed.coeff(i, j);
      ++rep.entries_checked;
      if (got != Rational(expected))
        throw ValidationMismatch(i, j, "closed form gives " + to_string(got) + ", recurrence gives " +
                                            to_string(expected));
    }
  return rep;
}

}  // namespace rootmaps
