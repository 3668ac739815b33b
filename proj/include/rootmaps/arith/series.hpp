#pragma once

#include <span>
#include <vector>

#include "rootmaps/arith/polynomial.hpp"
#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

/// Power series in t known through t^order, i.e. modulo t^(order+1).
/// Binary operations truncate to the smaller of the two orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<Rational> coeffs, int order);

  static TruncatedSeries constant(const Rational& c, int order);
  static TruncatedSeries from_polynomial(const UniPoly& p, int order);

  int order() const noexcept { return order_; }
  const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  std::span<const Rational> coefficients() const noexcept { return c_; }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& k);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned k) const;
  /// t * d/dt.
  TruncatedSeries euler_derivative() const;
  /// outer(this) for this(0) == 0, evaluated by Horner's rule.
  TruncatedSeries compose_into(const UniPoly& outer) const;
  /// outer(this) for a series outer, valid when this(0) == 0.
  TruncatedSeries compose_into(const TruncatedSeries& outer) const;

 private:
  std::vector<Rational> c_;
  int order_;
};

/// The tree series T(t), the unique power series with T = 1 + 3 t T^2,
/// computed coefficientwise from that equation.
TruncatedSeries tree_series(int order);

}  // namespace rootmaps
