#include "rootmaps/recurrence.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "rootmaps/errors.hpp"

namespace rootmaps {

namespace {

const Integer kZero(0);
const FacePolynomial kZeroPoly(Var::x);

// Coefficients of the recurrences after multiplying through by 6.
long linear_weight(int n) { return 2L * (2L * n - 1); }
long genus_drop_weight(int n) { return (2L * n - 3) * (n - 1L) * (2L * n - 1); }

Integer exact_quotient(const Integer& numerator, int n, const std::string& where) {
  const unsigned long d = static_cast<unsigned long>(n + 1);
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), d))
    throw NonIntegerResult(where + ": recurrence value is not an integer");
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), d);
  return q;
}

FacePolynomial exact_quotient(const FacePolynomial& numerator, int n, const std::string& where) {
  std::vector<Integer> c;
  c.reserve(numerator.coefficients().size());
  for (const auto& a : numerator.coefficients()) c.push_back(exact_quotient(a, n, where));
  return FacePolynomial(std::move(c), Var::x);
}

// (1 + x) p
FacePolynomial times_one_plus_x(const FacePolynomial& p) {
  auto c = p.coefficients();
  if (c.empty()) return p;
  std::vector<Integer> r(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    r[i] += c[i];
    r[i + 1] += c[i];
  }
  return FacePolynomial(std::move(r), Var::x);
}

std::string where(const char* table, int g, int n) {
  return std::string(table) + "(g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")";
}

template <class Fn>
void parallel_for(int begin, int end, unsigned threads, Fn&& fn) {
  const int count = end - begin;
  if (threads <= 1 || count < 2) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = begin + static_cast<int>(w); i < end; i += static_cast<int>(workers)) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// CountTable

const Integer& CountTable::at(int g, int n) const {
  if (g < 0 || n < 0 || 2 * g > n) return kZero;
  const auto& col = columns_.at(static_cast<std::size_t>(n));
  return col.at(static_cast<std::size_t>(g));
}

Integer CountTable::compute(int g, int n) const {
  if (n == 0) return Integer(g == 0 ? 1 : 0);
  Integer acc = at(g, n - 1) * (2 * linear_weight(n));
  if (g >= 1) acc += at(g - 1, n - 2) * genus_drop_weight(n);

  // sum_{k+l=n} sum_{i+j=g} (2k-1)(2l-1) Q_i^{k-1} Q_j^{l-1}; the inner sum is
  // symmetric under k <-> l, so only k <= l is visited.
  Integer sum, inner;
  for (int k = 1; 2 * k <= n; ++k) {
    const int l = n - k;
    inner = 0;
    const int lo = std::max(0, g - (l - 1) / 2);
    const int hi = std::min(g, (k - 1) / 2);
    for (int i = lo; i <= hi; ++i)
      mpz_addmul(inner.get_mpz_t(), at(i, k - 1).get_mpz_t(), at(g - i, l - 1).get_mpz_t());
    if (inner == 0) continue;
    long w = (2L * k - 1) * (2L * l - 1);
    if (k != l) w *= 2;
    mpz_addmul_ui(sum.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(w));
  }
  acc += 3 * sum;
  return exact_quotient(acc, n, where("Q", g, n));
}

void CountTable::ensure(int genus_max, int edges_max) {
  if (genus_max < 0 || edges_max < 0) return;
  const int cap = std::max(genus_cap_, genus_max);
  const int last = std::max(edge_cap(), edges_max);
  if (cap == genus_cap_ && last == edge_cap()) return;
  columns_.resize(static_cast<std::size_t>(last) + 1);
  for (int n = 0; n <= last; ++n) {
    auto& col = columns_[static_cast<std::size_t>(n)];
    const int start = static_cast<int>(col.size());
    const int target = std::min(n / 2, cap) + 1;
    if (start >= target) continue;
    col.resize(static_cast<std::size_t>(target));
    parallel_for(start, target, threads_,
                 [&](int g) { col[static_cast<std::size_t>(g)] = compute(g, n); });
  }
  genus_cap_ = cap;
}

Integer CountTable::get(int genus, int edges) {
  if (genus < 0 || edges < 0 || 2 * genus > edges) return 0;
  ensure(genus, edges);
  return at(genus, edges);
}

void CountTable::restore(int genus_cap, std::vector<std::vector<Integer>> columns) {
  for (std::size_t n = 0; n < columns.size(); ++n) {
    const auto expected = static_cast<std::size_t>(std::min(static_cast<int>(n) / 2, genus_cap) + 1);
    if (columns[n].size() != expected) throw std::invalid_argument("malformed count table column");
  }
  genus_cap_ = columns.empty() ? -1 : genus_cap;
  columns_ = std::move(columns);
}

// ---------------------------------------------------------------------------
// FacePolynomialTable

const FacePolynomial& FacePolynomialTable::at(int g, int n) const {
  if (g < 0 || n < 0 || 2 * g > n) return kZeroPoly;
  return columns_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(g));
}

FacePolynomial FacePolynomialTable::compute(int g, int n) const {
  if (n == 0) return g == 0 ? FacePolynomial::monomial(1, 1, Var::x) : FacePolynomial(Var::x);
  FacePolynomial acc = times_one_plus_x(at(g, n - 1)) * Integer(linear_weight(n));
  if (g >= 1) acc += at(g - 1, n - 2) * Integer(genus_drop_weight(n));

  FacePolynomial sum(Var::x);
  for (int k = 1; 2 * k <= n; ++k) {
    const int l = n - k;
    FacePolynomial inner(Var::x);
    const int lo = std::max(0, g - (l - 1) / 2);
    const int hi = std::min(g, (k - 1) / 2);
    for (int i = lo; i <= hi; ++i) inner += at(i, k - 1) * at(g - i, l - 1);
    if (inner.is_zero()) continue;
    long w = (2L * k - 1) * (2L * l - 1);
    if (k != l) w *= 2;
    sum += inner * Integer(w);
  }
  acc += sum * Integer(3);
  return exact_quotient(acc, n, where("Q(x)", g, n));
}

void FacePolynomialTable::ensure(int genus_max, int edges_max) {
  if (genus_max < 0 || edges_max < 0) return;
  const int cap = std::max(genus_cap_, genus_max);
  const int last = std::max(static_cast<int>(columns_.size()) - 1, edges_max);
  columns_.resize(static_cast<std::size_t>(last) + 1);
  for (int n = 0; n <= last; ++n) {
    auto& col = columns_[static_cast<std::size_t>(n)];
    const int target = std::min(n / 2, cap) + 1;
    for (int g = static_cast<int>(col.size()); g < target; ++g) col.push_back(compute(g, n));
  }
  genus_cap_ = cap;
}

FacePolynomial FacePolynomialTable::get(int genus, int edges) {
  if (genus < 0 || edges < 0 || 2 * genus > edges) return FacePolynomial(Var::x);
  ensure(genus, edges);
  return at(genus, edges);
}

void FacePolynomialTable::restore(int genus_cap, std::vector<std::vector<FacePolynomial>> columns) {
  for (std::size_t n = 0; n < columns.size(); ++n) {
    const auto expected = static_cast<std::size_t>(std::min(static_cast<int>(n) / 2, genus_cap) + 1);
    if (columns[n].size() != expected)
      throw std::invalid_argument("malformed face polynomial table column");
  }
  genus_cap_ = columns.empty() ? -1 : genus_cap;
  columns_ = std::move(columns);
}

// ---------------------------------------------------------------------------
// HarerZagierTable

const Integer& HarerZagierTable::at(int g, int n) const {
  if (g < 0 || n < 0) return kZero;
  return rows_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(n));
}

void HarerZagierTable::ensure(int genus_max, int edges_max) {
  if (genus_max < 0 || edges_max < 0) return;
  const int last = std::max(edge_cap_, edges_max);
  if (static_cast<int>(rows_.size()) < genus_max + 1) rows_.resize(static_cast<std::size_t>(genus_max) + 1);
  for (int g = 0; g < static_cast<int>(rows_.size()); ++g) {
    auto& row = rows_[static_cast<std::size_t>(g)];
    for (int n = static_cast<int>(row.size()); n <= last; ++n) {
      if (n == 0) {
        row.emplace_back(g == 0 ? 1 : 0);
      } else if (2 * g > n) {
        row.emplace_back(0);
      } else {
        Integer acc = row[static_cast<std::size_t>(n - 1)] * linear_weight(n);
        if (g >= 1) acc += at(g - 1, n - 2) * genus_drop_weight(n);
        row.push_back(exact_quotient(acc, n, where("epsilon", g, n)));
      }
    }
  }
  edge_cap_ = last;
}

Integer HarerZagierTable::get(int genus, int edges) {
  if (genus < 0 || edges < 0) return 0;
  ensure(genus, edges);
  return at(genus, edges);
}

// ---------------------------------------------------------------------------
// MapTable

const Integer& MapTable::at(int g, int i, int j) const {
  if (g < 0 || i < 1 || j < 1) return kZero;
  const auto& grid = grids_.at(static_cast<std::size_t>(g));
  return grid.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

Integer MapTable::compute(int g, int i, int j) const {
  const int n = i + j + 2 * g - 2;
  if (n == 0) return Integer(i == 1 && j == 1 ? 1 : 0);
  Integer acc = (at(g, i - 1, j) + at(g, i, j - 1)) * linear_weight(n);
  if (g >= 1) acc += at(g - 1, i, j) * genus_drop_weight(n);

  Integer sum;
  for (int i1 = 1; i1 < i; ++i1) {
    for (int j1 = 1; j1 < j; ++j1) {
      for (int g1 = 0; g1 <= g; ++g1) {
        const Integer& a = at(g1, i1, j1);
        if (a == 0) continue;
        const Integer& b = at(g - g1, i - i1, j - j1);
        if (b == 0) continue;
        const long n1 = i1 + j1 + 2L * g1 - 1;
        const long n2 = n - n1;
        Integer prod = a * b;
        mpz_addmul_ui(sum.get_mpz_t(), prod.get_mpz_t(),
                      static_cast<unsigned long>((2 * n1 - 1) * (2 * n2 - 1)));
      }
    }
  }
  acc += 3 * sum;
  return exact_quotient(acc, n, "M(g=" + std::to_string(g) + ", i=" + std::to_string(i) +
                                    ", j=" + std::to_string(j) + ")");
}

void MapTable::ensure(int genus_max, int edges_max) {
  if (genus_max < 0 || edges_max < 0) return;
  const int gcap = std::max(genus_cap_, genus_max);
  const int ncap = std::max(edge_cap_, edges_max);
  if (gcap == genus_cap_ && ncap == edge_cap_) return;

  grids_.resize(static_cast<std::size_t>(gcap) + 1);
  for (int g = 0; g <= gcap; ++g) {
    const int span = ncap + 2 - 2 * g;  // largest i + j at this genus
    if (span < 2) continue;
    auto& grid = grids_[static_cast<std::size_t>(g)];
    grid.resize(static_cast<std::size_t>(span) + 1);
    for (auto& row : grid) row.resize(static_cast<std::size_t>(span) + 1);
  }
  for (int level = 0; level <= ncap; ++level) {
    for (int g = 0; g <= gcap; ++g) {
      if (g <= genus_cap_ && level <= edge_cap_) continue;
      const int s = level + 2 - 2 * g;
      if (s < 2) continue;
      for (int i = 1; i < s; ++i)
        grids_[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)]
              [static_cast<std::size_t>(s - i)] = compute(g, i, s - i);
    }
  }
  genus_cap_ = gcap;
  edge_cap_ = ncap;
}

Integer MapTable::get(int genus, int vertices, int faces) {
  if (genus < 0 || vertices < 1 || faces < 1) return 0;
  ensure(genus, vertices + faces + 2 * genus - 2);
  return at(genus, vertices, faces);
}

void MapTable::restore(int genus_cap, int edge_cap,
                       std::vector<std::vector<std::vector<Integer>>> grids) {
  if (static_cast<int>(grids.size()) != genus_cap + 1)
    throw std::invalid_argument("malformed map table");
  for (int g = 0; g <= genus_cap; ++g) {
    const int span = edge_cap + 2 - 2 * g;
    const std::size_t expected = span < 2 ? 0 : static_cast<std::size_t>(span) + 1;
    const auto& grid = grids[static_cast<std::size_t>(g)];
    if (grid.size() != expected) throw std::invalid_argument("malformed map table grid");
    for (const auto& row : grid)
      if (row.size() != expected) throw std::invalid_argument("malformed map table row");
  }
  genus_cap_ = genus_cap;
  edge_cap_ = edge_cap;
  grids_ = std::move(grids);
}

// ---------------------------------------------------------------------------
// RecurrenceEngine

Integer RecurrenceEngine::q_count(int genus, int edges) { return counts_.get(genus, edges); }

FacePolynomial RecurrenceEngine::q_poly(int genus, int edges) {
  return face_polys_.get(genus, edges);
}

Integer RecurrenceEngine::q_count_faces(int genus, int edges, int faces) {
  if (faces < 1) return 0;
  return q_poly(genus, edges).coeff(faces);
}

Integer RecurrenceEngine::hz(int genus, int edges) { return hz_.get(genus, edges); }

Integer RecurrenceEngine::m_count(int genus, int vertices, int faces) {
  return maps_.get(genus, vertices, faces);
}

GenusPolynomial RecurrenceEngine::genus_poly(int edges) {
  if (edges < 0) return {};
  auto product = [](const GenusPolynomial& a, const GenusPolynomial& b) {
    GenusPolynomial r;
    if (a.by_genus.empty() || b.by_genus.empty()) return r;
    r.by_genus.assign(a.by_genus.size() + b.by_genus.size() - 1, FacePolynomial(Var::x));
    for (std::size_t i = 0; i < a.by_genus.size(); ++i)
      for (std::size_t j = 0; j < b.by_genus.size(); ++j)
        r.by_genus[i + j] += a.by_genus[i] * b.by_genus[j];
    return r;
  };
  auto accumulate = [](GenusPolynomial& acc, const GenusPolynomial& term, std::size_t shift,
                       const Integer& k) {
    if (acc.by_genus.size() < term.by_genus.size() + shift)
      acc.by_genus.resize(term.by_genus.size() + shift, FacePolynomial(Var::x));
    for (std::size_t g = 0; g < term.by_genus.size(); ++g) acc.by_genus[g + shift] += term.by_genus[g] * k;
  };

  if (genus_polys_.empty()) genus_polys_.push_back({{FacePolynomial::monomial(1, 1, Var::x)}});
  for (int n = static_cast<int>(genus_polys_.size()); n <= edges; ++n) {
    GenusPolynomial acc;
    GenusPolynomial prev;
    for (const auto& p : genus_polys_[static_cast<std::size_t>(n - 1)].by_genus)
      prev.by_genus.push_back(times_one_plus_x(p));
    accumulate(acc, prev, 0, Integer(linear_weight(n)));
    if (n >= 2) accumulate(acc, genus_polys_[static_cast<std::size_t>(n - 2)], 1, Integer(genus_drop_weight(n)));
    for (int k = 1; k < n; ++k) {
      const int l = n - k;
      accumulate(acc,
                 product(genus_polys_[static_cast<std::size_t>(k - 1)],
                         genus_polys_[static_cast<std::size_t>(l - 1)]),
                 0, Integer(3L * (2L * k - 1) * (2L * l - 1)));
    }
    GenusPolynomial h;
    for (std::size_t g = 0; g < acc.by_genus.size(); ++g)
      h.by_genus.push_back(exact_quotient(acc.by_genus[g], n, where("H", static_cast<int>(g), n)));
    while (!h.by_genus.empty() && h.by_genus.back().is_zero()) h.by_genus.pop_back();
    genus_polys_.push_back(std::move(h));
  }
  return genus_polys_[static_cast<std::size_t>(edges)];
}

std::vector<TableEntry> RecurrenceEngine::table_range(int genus_max, int edges_max, bool with_faces) {
  std::vector<TableEntry> out;
  if (genus_max < 0 || edges_max < 0) return out;
  counts_.ensure(std::min(genus_max, edges_max / 2), edges_max);
  if (with_faces) face_polys_.ensure(std::min(genus_max, edges_max / 2), edges_max);
  for (int n = 0; n <= edges_max; ++n) {
    for (int g = 0; g <= std::min(genus_max, n / 2); ++g) {
      TableEntry e{g, n, counts_.get(g, n), std::nullopt};
      if (with_faces) e.faces = face_polys_.get(g, n);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace rootmaps
