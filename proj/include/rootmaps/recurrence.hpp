#pragma once

#include <optional>
#include <vector>

#include "rootmaps/arith/polynomial.hpp"
#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

// All tables below evaluate their recurrence with both sides multiplied by 6,
// so the step is  (n+1) * value = integer expression,  and store the exact
// quotient after checking divisibility. A nonzero remainder raises
// NonIntegerResult. Indices outside the support read as zero.
//
// Tables are filled by a single writer and may then be read concurrently.

/// Q_g^n, rooted maps of genus g with n edges. Column n holds every genus
/// 0 <= g <= min(n/2, genus cap); columns are filled in increasing n.
class CountTable {
 public:
  explicit CountTable(unsigned threads = 1) : threads_(threads ? threads : 1) {}

  void set_threads(unsigned threads) { threads_ = threads ? threads : 1; }
  void ensure(int genus_max, int edges_max);
  Integer get(int genus, int edges);

  int genus_cap() const noexcept { return genus_cap_; }
  int edge_cap() const noexcept { return static_cast<int>(columns_.size()) - 1; }
  const std::vector<std::vector<Integer>>& columns() const noexcept { return columns_; }
  void restore(int genus_cap, std::vector<std::vector<Integer>> columns);

 private:
  const Integer& at(int genus, int edges) const;
  Integer compute(int genus, int edges) const;

  unsigned threads_;
  int genus_cap_ = -1;
  std::vector<std::vector<Integer>> columns_;
};

/// Q_g^n(x): the same maps with x marking faces.
class FacePolynomialTable {
 public:
  void ensure(int genus_max, int edges_max);
  FacePolynomial get(int genus, int edges);

  int genus_cap() const noexcept { return genus_cap_; }
  const std::vector<std::vector<FacePolynomial>>& columns() const noexcept { return columns_; }
  void restore(int genus_cap, std::vector<std::vector<FacePolynomial>> columns);

 private:
  const FacePolynomial& at(int genus, int edges) const;
  FacePolynomial compute(int genus, int edges) const;

  int genus_cap_ = -1;
  std::vector<std::vector<FacePolynomial>> columns_;
};

/// epsilon_g(n), one-face maps, through the linear Harer-Zagier recurrence.
class HarerZagierTable {
 public:
  void ensure(int genus_max, int edges_max);
  Integer get(int genus, int edges);
  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }

 private:
  const Integer& at(int genus, int edges) const;

  int edge_cap_ = -1;
  std::vector<std::vector<Integer>> rows_;  // rows_[g][n]
};

/// M_g^{i,j}: maps of genus g with i vertices and j faces, through the
/// vertex/face symmetric recurrence. "Level" of an entry is its edge count
/// n = i + j + 2g - 2; levels are filled in increasing order.
class MapTable {
 public:
  void ensure(int genus_max, int edges_max);
  Integer get(int genus, int vertices, int faces);

  int genus_cap() const noexcept { return genus_cap_; }
  int edge_cap() const noexcept { return edge_cap_; }
  /// grids()[g][i][j]; rows and columns 0 are always zero.
  const std::vector<std::vector<std::vector<Integer>>>& grids() const noexcept { return grids_; }
  void restore(int genus_cap, int edge_cap, std::vector<std::vector<std::vector<Integer>>> grids);

 private:
  const Integer& at(int genus, int vertices, int faces) const;
  Integer compute(int genus, int vertices, int faces) const;

  int genus_cap_ = -1;
  int edge_cap_ = -1;
  std::vector<std::vector<std::vector<Integer>>> grids_;
};

/// H_n(x, s) = sum_g Q_g^n(x) s^g, stored by powers of s.
struct GenusPolynomial {
  std::vector<FacePolynomial> by_genus;

  FacePolynomial coeff(int genus) const {
    if (genus < 0 || genus >= static_cast<int>(by_genus.size())) return FacePolynomial(Var::x);
    return by_genus[static_cast<std::size_t>(genus)];
  }
  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;
};

struct TableEntry {
  int genus;
  int edges;
  Integer count;
  std::optional<FacePolynomial> faces;
};

/// Front door to every counting recurrence. Each method memoizes.
class RecurrenceEngine {
 public:
  explicit RecurrenceEngine(unsigned threads = 1) : counts_(threads) {}

  void set_threads(unsigned threads) { counts_.set_threads(threads); }

  Integer q_count(int genus, int edges);
  FacePolynomial q_poly(int genus, int edges);
  Integer q_count_faces(int genus, int edges, int faces);
  Integer hz(int genus, int edges);
  Integer m_count(int genus, int vertices, int faces);
  GenusPolynomial genus_poly(int edges);

  /// Every (g, n) with n <= edges_max and g <= min(genus_max, n/2), ordered
  /// by n then g.
  std::vector<TableEntry> table_range(int genus_max, int edges_max, bool with_faces = false);

  CountTable& counts() noexcept { return counts_; }
  FacePolynomialTable& face_polys() noexcept { return face_polys_; }
  HarerZagierTable& harer_zagier() noexcept { return hz_; }
  MapTable& maps() noexcept { return maps_; }

 private:
  CountTable counts_;
  FacePolynomialTable face_polys_;
  HarerZagierTable hz_;
  MapTable maps_;
  std::vector<GenusPolynomial> genus_polys_;
};

}  // namespace rootmaps
