#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

/// Name of the indeterminate a polynomial is written in. Arithmetic between
/// polynomials in different variables is rejected.
enum class Var : char { x = 'x', T = 'T', s = 's' };

/// Dense univariate polynomial; coefficient i multiplies var^i. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Var v) : var_(v) {}
  Polynomial(std::vector<R> coeffs, Var v) : c_(std::move(coeffs)), var_(v) { trim(); }

  static Polynomial constant(const R& value, Var v) { return monomial(value, 0, v); }
  static Polynomial monomial(const R& value, int exponent, Var v) {
    std::vector<R> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = value;
    return Polynomial(std::move(c), v);
  }

  Var var() const noexcept { return var_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const R> coefficients() const noexcept { return c_; }

  R coeff(int i) const {
    if (i < 0 || i > degree()) return R(0);
    return c_[static_cast<std::size_t>(i)];
  }

  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  R evaluate(const R& at) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<R> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d), var_);
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const R& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= k;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= R(-1); }
  friend Polynomial operator*(Polynomial a, const R& k) { return a *= k; }
  friend Polynomial operator*(const R& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r), a.var_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check_var(const Polynomial& o) const {
    if (o.var_ != var_) throw std::invalid_argument("polynomial variable mismatch");
  }

  std::vector<R> c_;
  Var var_ = Var::x;
};

using UniPoly = Polynomial<Rational>;
/// Integer polynomial in x; coefficient f counts maps with f faces.
using FacePolynomial = Polynomial<Integer>;

/// (x - a)^k expanded.
template <class R>
Polynomial<R> linear_power(const R& a, int k, Var v) {
  Polynomial<R> base(std::vector<R>{-a, R(1)}, v);
  Polynomial<R> r = Polynomial<R>::constant(R(1), v);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

/// Coefficients of p(y + a) in powers of y (repeated synthetic division).
template <class R>
Polynomial<R> taylor_shift(const Polynomial<R>& p, const R& a) {
  std::vector<R> c(p.coefficients().begin(), p.coefficients().end());
  const std::size_t n = c.size();
  if (a != 0) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return Polynomial<R>(std::move(c), p.var());
}

/// Exact division by (x - a); the remainder p(a) is returned alongside.
template <class R>
std::pair<Polynomial<R>, R> divide_linear(const Polynomial<R>& p, const R& a) {
  auto c = p.coefficients();
  if (c.empty()) return {Polynomial<R>(p.var()), R(0)};
  std::vector<R> q(c.size() - 1);
  R carry(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    R next = c[i] + carry * a;
    if (i == 0) return {Polynomial<R>(std::move(q), p.var()), next};
    q[i - 1] = next;
    carry = next;
  }
  return {Polynomial<R>(std::move(q), p.var()), R(0)};
}

/// Euclidean division over a field: p = quotient * d + remainder.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

/// Antiderivative with zero constant term.
UniPoly antiderivative(const UniPoly& p);

UniPoly to_rational(const FacePolynomial& p, Var v);

}  // namespace rootmaps
