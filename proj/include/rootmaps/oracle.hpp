#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootmaps/arith/polynomial.hpp"
#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

class RecurrenceEngine;

/// A permutation of the darts 0..size-1.
class DartPermutation {
 public:
  explicit DartPermutation(std::vector<int> images);
  static DartPermutation identity(int size);
  /// (0 1)(2 3)...(2n-2 2n-1), the edge involution of a rotation system.
  static DartPermutation fixed_involution(int edges);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int dart) const { return images_.at(static_cast<std::size_t>(dart)); }
  std::span<const int> images() const noexcept { return images_; }

  /// Each cycle starts at its smallest dart; cycles are listed by that dart.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  /// Cycle lengths in decreasing order.
  std::vector<int> cycle_type() const;
  DartPermutation inverse() const;

  /// (a * b)(d) = a(b(d)).
  friend DartPermutation operator*(const DartPermutation& a, const DartPermutation& b);
  friend bool operator==(const DartPermutation&, const DartPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// True when the group generated by `generators` acts transitively.
bool is_transitive(std::span<const DartPermutation> generators);

struct CensusKey {
  int genus;
  int vertices;
  int faces;
  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct OracleCensus {
  int edges = 0;
  std::map<CensusKey, Integer> counts;

  Integer total() const;
  Integer genus_total(int genus) const;
  /// sum over maps of genus g of x^faces.
  FacePolynomial face_polynomial(int genus) const;
  int max_genus() const;
};

/// Rotation systems on 2n darts, 1 <= n <= 6, scanned exhaustively.
OracleCensus census_rooted_maps(int edges, unsigned threads = 1);

/// (white vertices, total vertices) -> rooted bipartite maps with m edges
/// whose faces have half-degrees `profile`, for 1 <= m <= 7.
using BipartiteCensus = std::map<std::pair<int, int>, Integer>;
BipartiteCensus census_bipartite(int edges, std::span<const int> profile, unsigned threads = 1);

/// Genus of a bipartite census key: total - m + faces = 2 - 2g.
int bipartite_genus(int edges, int faces, int total_vertices);

/// X_g^n(x) from census_bipartite(2n-1, (3, 2^(n-2))), keyed by genus.
std::map<int, FacePolynomial> hexagon_polynomials(int n, unsigned threads = 1);

/// Checks Q_g^n(x) = 3/(2n-1) X_g^n(x) + (1+x) Q_g^{n-1}(x) for every genus
/// with a map of n edges; throws IdentityViolation on the first failure.
void check_tutte_hexa(RecurrenceEngine& engine, int n, const std::map<int, FacePolynomial>& hexagons);
void verify_tutte_hexa(RecurrenceEngine& engine, int n, unsigned threads = 1);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// The first failing check, or nullptr.
  const CheckResult* first_failure() const;
};

/// Compares the oracle with every engine table for 1 <= n <= n_max, plus the
/// quadrangulation bijection and the hexagon identity where the scans fit.
VerifyReport verify_all(RecurrenceEngine& engine, int n_max, unsigned threads = 1);

}  // namespace rootmaps
