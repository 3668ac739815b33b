#include "rootmaps/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rootmaps/errors.hpp"
#include "rootmaps/recurrence.hpp"

namespace rootmaps {

namespace {

constexpr int kMaxDarts = 12;
constexpr int kMaxBipartiteEdges = 7;

using Perm = std::array<std::uint8_t, kMaxDarts>;

int count_cycles(const std::uint8_t* p, int size) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int d = 0; d < size; ++d) {
    if (seen >> d & 1u) continue;
    ++cycles;
    for (int e = d; !(seen >> e & 1u); e = p[e]) seen |= 1u << e;
  }
  return cycles;
}

// Orbit of 0 under <a, b> covers all `size` points.
bool transitive_pair(const std::uint8_t* a, const std::uint8_t* b, int size) {
  std::uint32_t seen = 1;
  std::array<std::uint8_t, kMaxDarts> stack{};
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const int d = stack[--top];
    for (int e : {static_cast<int>(a[d]), static_cast<int>(b[d])}) {
      if (seen >> e & 1u) continue;
      seen |= 1u << e;
      stack[top++] = static_cast<std::uint8_t>(e);
    }
  }
  return seen == (size == 32 ? ~0u : (1u << size) - 1u);
}

// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers.
template <class Body>
void run_chunks(int chunks, unsigned threads, Body body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  std::atomic<int> next{0};
  auto loop = [&](unsigned worker) {
    for (int c = next++; c < chunks; c = next++) body(worker, c);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(loop, w);
  loop(0);
}

Integer normalized(const Integer& raw, const Integer& divisor, const std::string& what) {
  if (!mpz_divisible_p(raw.get_mpz_t(), divisor.get_mpz_t()))
    throw NonIntegerClassCount(what + ": class count " + raw.get_str() + " is not divisible by " +
                               divisor.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), raw.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

FacePolynomial monomial_sum(const std::map<int, Integer>& by_exponent) {
  std::vector<Integer> c;
  for (const auto& [e, v] : by_exponent) {
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] += v;
  }
  return FacePolynomial(std::move(c), Var::x);
}

std::string poly_text(const FacePolynomial& p) {
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) s += ",";
    s += p.coeff(i).get_str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace

// ---------------------------------------------------------------------------
// DartPermutation

DartPermutation::DartPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("dart images do not form a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

DartPermutation DartPermutation::identity(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return DartPermutation(std::move(v));
}

DartPermutation DartPermutation::fixed_involution(int edges) {
  std::vector<int> v(static_cast<std::size_t>(2 * edges));
  for (int d = 0; d < 2 * edges; ++d) v[static_cast<std::size_t>(d)] = d ^ 1;
  return DartPermutation(std::move(v));
}

std::vector<std::vector<int>> DartPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int d = 0; d < size(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    std::vector<int> cycle;
    for (int e = d; !seen[static_cast<std::size_t>(e)]; e = (*this)(e)) {
      seen[static_cast<std::size_t>(e)] = true;
      cycle.push_back(e);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int DartPermutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> DartPermutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

DartPermutation DartPermutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int d = 0; d < size(); ++d) v[static_cast<std::size_t>((*this)(d))] = d;
  return DartPermutation(std::move(v));
}

DartPermutation operator*(const DartPermutation& a, const DartPermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int d = 0; d < a.size(); ++d) v[static_cast<std::size_t>(d)] = a(b(d));
  return DartPermutation(std::move(v));
}

bool is_transitive(std::span<const DartPermutation> generators) {
  if (generators.empty()) return true;
  const int n = generators.front().size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = n;
  for (const DartPermutation& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generators act on different sets");
    for (int d = 0; d < n; ++d) {
      const int a = find(d);
      const int b = find(g(d));
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  }
  return components <= 1;
}

// ---------------------------------------------------------------------------
// Censuses

Integer OracleCensus::total() const {
  Integer t;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

Integer OracleCensus::genus_total(int genus) const {
  Integer t;
  for (const auto& [k, v] : counts)
    if (k.genus == genus) t += v;
  return t;
}

FacePolynomial OracleCensus::face_polynomial(int genus) const {
  std::map<int, Integer> by_faces;
  for (const auto& [k, v] : counts)
    if (k.genus == genus) by_faces[k.faces] += v;
  return monomial_sum(by_faces);
}

int OracleCensus::max_genus() const {
  int g = -1;
  for (const auto& [k, v] : counts) g = std::max(g, k.genus);
  return g;
}

OracleCensus census_rooted_maps(int edges, unsigned threads) {
  if (edges < 1 || 2 * edges > kMaxDarts) throw std::invalid_argument("census_rooted_maps supports 1 <= n <= 6");
  const int darts = 2 * edges;
  // raw[w][(g * (darts + 1) + v) * (darts + 1) + f]
  const std::size_t cells = static_cast<std::size_t>(edges + 1) * static_cast<std::size_t>(darts + 1) *
                            static_cast<std::size_t>(darts + 1);
  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> raw(workers, std::vector<std::uint64_t>(cells, 0));

  Perm alpha{};
  for (int d = 0; d < darts; ++d) alpha[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>(d ^ 1);

  run_chunks(darts, workers, [&](unsigned worker, int first) {
    auto& local = raw[worker];
    Perm s{};
    s[0] = static_cast<std::uint8_t>(first);
    for (int d = 0, k = 1; d < darts; ++d)
      if (d != first) s[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(d);
    Perm phi{};
    do {
      if (!transitive_pair(s.data(), alpha.data(), darts)) continue;
      for (int d = 0; d < darts; ++d) phi[static_cast<std::size_t>(d)] = s[static_cast<std::size_t>(d ^ 1)];
      const int v = count_cycles(s.data(), darts);
      const int f = count_cycles(phi.data(), darts);
      const int g = (2 - v + edges - f) / 2;
      ++local[(static_cast<std::size_t>(g) * static_cast<std::size_t>(darts + 1) + static_cast<std::size_t>(v)) *
                  static_cast<std::size_t>(darts + 1) +
              static_cast<std::size_t>(f)];
    } while (std::next_permutation(s.begin() + 1, s.begin() + darts));
  });

  OracleCensus census;
  census.edges = edges;
  const Integer divisor = pow_integer(2, static_cast<unsigned long>(edges - 1)) *
                          factorial(static_cast<unsigned long>(edges - 1));
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::uint64_t sum = 0;
    for (const auto& local : raw) sum += local[cell];
    if (sum == 0) continue;
    const int f = static_cast<int>(cell % static_cast<std::size_t>(darts + 1));
    const int v = static_cast<int>(cell / static_cast<std::size_t>(darts + 1) % static_cast<std::size_t>(darts + 1));
    const int g = static_cast<int>(cell / static_cast<std::size_t>(darts + 1) / static_cast<std::size_t>(darts + 1));
    const Integer raw_count(static_cast<unsigned long>(sum));
    census.counts[{g, v, f}] = normalized(raw_count, divisor,
                                          "rotation systems (g,v,f)=(" + std::to_string(g) + "," +
                                              std::to_string(v) + "," + std::to_string(f) + ")");
  }
  return census;
}

int bipartite_genus(int edges, int faces, int total_vertices) {
  const int twice = 2 - total_vertices + edges - faces;
  if (twice < 0 || twice % 2) throw std::logic_error("bipartite key violates Euler's relation");
  return twice / 2;
}

BipartiteCensus census_bipartite(int edges, std::span<const int> profile, unsigned threads) {
  if (edges < 1 || edges > kMaxBipartiteEdges) throw std::invalid_argument("census_bipartite supports 1 <= m <= 7");
  std::vector<int> target(profile.begin(), profile.end());
  if (std::accumulate(target.begin(), target.end(), 0) != edges ||
      std::any_of(target.begin(), target.end(), [](int p) { return p < 1; }))
    throw std::invalid_argument("profile must be a partition of the edge count");
  std::sort(target.rbegin(), target.rend());

  std::vector<Perm> perms;
  std::vector<int> cycles;
  Perm p{};
  for (int d = 0; d < edges; ++d) p[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>(d);
  do {
    perms.push_back(p);
    cycles.push_back(count_cycles(p.data(), edges));
  } while (std::next_permutation(p.begin(), p.begin() + edges));

  const int side = edges + 1;
  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> raw(workers,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(side * 2 * side), 0));
  const int chunks = static_cast<int>(perms.size());
  run_chunks(chunks, workers, [&](unsigned worker, int ia) {
    const Perm& a = perms[static_cast<std::size_t>(ia)];
    Perm phi{};
    std::array<int, kMaxBipartiteEdges> lengths{};
    for (std::size_t ib = 0; ib < perms.size(); ++ib) {
      const Perm& b = perms[ib];
      for (int d = 0; d < edges; ++d) phi[static_cast<std::size_t>(d)] = a[b[static_cast<std::size_t>(d)]];
      // cycle type of phi
      std::uint32_t seen = 0;
      int count = 0;
      for (int d = 0; d < edges; ++d) {
        if (seen >> d & 1u) continue;
        int len = 0;
        for (int e = d; !(seen >> e & 1u); e = phi[static_cast<std::size_t>(e)]) {
          seen |= 1u << e;
          ++len;
        }
        lengths[static_cast<std::size_t>(count++)] = len;
      }
      if (count != static_cast<int>(target.size())) continue;
      std::sort(lengths.begin(), lengths.begin() + count, std::greater<>());
      if (!std::equal(target.begin(), target.end(), lengths.begin())) continue;
      if (!transitive_pair(a.data(), b.data(), edges)) continue;
      const int white = cycles[static_cast<std::size_t>(ia)];
      const int total = white + cycles[ib];
      ++raw[worker][static_cast<std::size_t>(white * 2 * side + total)];
    }
  });

  BipartiteCensus census;
  const Integer divisor = factorial(static_cast<unsigned long>(edges - 1));
  for (int white = 0; white < side; ++white)
    for (int total = 0; total < 2 * side; ++total) {
      std::uint64_t sum = 0;
      for (const auto& local : raw) sum += local[static_cast<std::size_t>(white * 2 * side + total)];
      if (sum == 0) continue;
      census[{white, total}] = normalized(Integer(static_cast<unsigned long>(sum)), divisor,
                                          "bipartite pairs (white,total)=(" + std::to_string(white) + "," +
                                              std::to_string(total) + ")");
    }
  return census;
}

std::map<int, FacePolynomial> hexagon_polynomials(int n, unsigned threads) {
  if (n < 2) throw std::invalid_argument("the hexagon identity needs n >= 2");
  const int edges = 2 * n - 1;
  std::vector<int> profile{3};
  profile.insert(profile.end(), static_cast<std::size_t>(n - 2), 2);
  const int faces = static_cast<int>(profile.size());
  std::map<int, std::map<int, Integer>> by_genus;
  for (const auto& [key, count] : census_bipartite(edges, profile, threads))
    by_genus[bipartite_genus(edges, faces, key.second)][key.first] += count;
  std::map<int, FacePolynomial> out;
  for (const auto& [g, dist] : by_genus) out.emplace(g, monomial_sum(dist));
  return out;
}

void check_tutte_hexa(RecurrenceEngine& engine, int n, const std::map<int, FacePolynomial>& hexagons) {
  if (n < 2) throw std::invalid_argument("the hexagon identity needs n >= 2");
  int gmax = n / 2;
  if (!hexagons.empty()) gmax = std::max(gmax, hexagons.rbegin()->first);
  const FacePolynomial one_plus_x(std::vector<Integer>{1, 1}, Var::x);
  for (int g = 0; g <= gmax; ++g) {
    const auto it = hexagons.find(g);
    const FacePolynomial x = it == hexagons.end() ? FacePolynomial(Var::x) : it->second;
    // (2n-1) (Q_g^n - (1+x) Q_g^{n-1}) = 3 X_g^n
    const FacePolynomial lhs = Integer(2 * n - 1) * (engine.q_poly(g, n) - one_plus_x * engine.q_poly(g, n - 1));
    const FacePolynomial rhs = Integer(3) * x;
    if (!(lhs == rhs))
      throw IdentityViolation("hexagon identity fails at g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                              ": difference (2n-1)Q - (2n-1)(1+x)Q' - 3X = " + poly_text(lhs - rhs));
  }
}

void verify_tutte_hexa(RecurrenceEngine& engine, int n, unsigned threads) {
  if (n < 2 || n > 4) throw std::invalid_argument("verify_tutte_hexa supports 2 <= n <= 4");
  check_tutte_hexa(engine, n, hexagon_polynomials(n, threads));
}

// ---------------------------------------------------------------------------
// verify_all

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

VerifyReport verify_all(RecurrenceEngine& engine, int n_max, unsigned threads) {
  if (n_max < 1 || n_max > 6) throw std::invalid_argument("verify_all supports 1 <= n_max <= 6");
  VerifyReport report;
  auto record = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto tag = [](const char* what, int g, int n) {
    return std::string(what) + " g=" + std::to_string(g) + " n=" + std::to_string(n);
  };

  for (int n = 1; n <= n_max; ++n) {
    const OracleCensus census = census_rooted_maps(n, threads);
    record("genus range n=" + std::to_string(n), census.max_genus() <= n / 2,
           "largest genus seen " + std::to_string(census.max_genus()));
    for (int g = 0; 2 * g <= n; ++g) {
      const Integer oracle_total = census.genus_total(g);
      const Integer table_total = engine.q_count(g, n);
      record(tag("q_count", g, n), oracle_total == table_total,
             "oracle " + oracle_total.get_str() + ", table " + table_total.get_str());

      const FacePolynomial oracle_faces = census.face_polynomial(g);
      const FacePolynomial table_faces = engine.q_poly(g, n);
      record(tag("q_poly", g, n), oracle_faces == table_faces,
             "oracle " + poly_text(oracle_faces) + ", table " + poly_text(table_faces));

      bool m_ok = true;
      std::string m_detail = "all (v,f) agree";
      for (int v = 1; v + 1 <= n + 2 - 2 * g && m_ok; ++v) {
        const int f = n + 2 - 2 * g - v;
        const auto it = census.counts.find({g, v, f});
        const Integer oracle = it == census.counts.end() ? Integer(0) : it->second;
        const Integer table = engine.m_count(g, v, f);
        if (oracle != table) {
          m_ok = false;
          m_detail = "v=" + std::to_string(v) + " f=" + std::to_string(f) + ": oracle " + oracle.get_str() +
                     ", table " + table.get_str();
        }
      }
      record(tag("m_count", g, n), m_ok, m_detail);

      const auto one_face = census.counts.find({g, n + 1 - 2 * g, 1});
      const Integer oracle_hz = one_face == census.counts.end() ? Integer(0) : one_face->second;
      const Integer table_hz = engine.hz(g, n);
      record(tag("hz", g, n), oracle_hz == table_hz,
             "oracle " + oracle_hz.get_str() + ", table " + table_hz.get_str());
    }

    if (n <= 3) {
      const std::vector<int> profile(static_cast<std::size_t>(n), 2);
      std::map<int, std::map<int, Integer>> by_genus;
      for (const auto& [key, count] : census_bipartite(2 * n, profile, threads))
        by_genus[bipartite_genus(2 * n, n, key.second)][key.first] += count;
      for (int g = 0; 2 * g <= n; ++g) {
        const FacePolynomial quad = by_genus.count(g) ? monomial_sum(by_genus[g]) : FacePolynomial(Var::x);
        const FacePolynomial maps = census.face_polynomial(g);
        record(tag("quadrangulation bijection", g, n), quad == maps,
               "white vertices " + poly_text(quad) + ", faces " + poly_text(maps));
      }
    }
    if (n >= 2 && n <= 3) {
      try {
        verify_tutte_hexa(engine, n, threads);
        record("hexagon identity n=" + std::to_string(n), true, "holds for every genus");
      } catch (const IdentityViolation& e) {
        record("hexagon identity n=" + std::to_string(n), false, e.what());
      }
    }
  }
  return report;
}

}  // namespace rootmaps
