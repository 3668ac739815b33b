#pragma once

#include <span>
#include <vector>

#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

enum class VarPair { xy, pq };

/// Bivariate power series truncated at total degree `degree()`: every
/// coefficient a^i b^j with i + j <= degree is stored, nothing above.
class BiSeries {
 public:
  BiSeries(int degree, VarPair vars);

  static BiSeries constant(const Rational& c, int degree, VarPair vars);
  /// The series of c * first^i * second^j.
  static BiSeries monomial(const Rational& c, int i, int j, int degree, VarPair vars);

  int degree() const noexcept { return degree_; }
  VarPair vars() const noexcept { return vars_; }

  const Rational& coeff(int i, int j) const { return c_.at(index(i, j)); }
  Rational& coeff(int i, int j) { return c_.at(index(i, j)); }

  BiSeries truncated(int degree) const;
  BiSeries with_vars(VarPair vars) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Rational& k);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Rational& k) { return a *= k; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

  BiSeries inverse() const;
  BiSeries pow(unsigned k) const;

  /// f(first, second) with `first` and `second` substituted for the two
  /// variables of `f`. Both substitutes must have zero constant term so the
  /// result is exact through min(degree) in the substitutes' variables.
  static BiSeries substitute(const BiSeries& f, const BiSeries& first, const BiSeries& second);

 private:
  static std::size_t index(int i, int j) {
    const int d = i + j;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
           static_cast<std::size_t>(j);
  }
  void check_compatible(const BiSeries& o) const;

  int degree_;
  VarPair vars_;
  std::vector<Rational> c_;
};

}  // namespace rootmaps
