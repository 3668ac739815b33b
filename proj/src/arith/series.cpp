#include "rootmaps/arith/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootmaps {

TruncatedSeries::TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1), order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order) : TruncatedSeries(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  std::move(coeffs.begin(), coeffs.begin() + static_cast<long>(n), c_.begin());
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const UniPoly& p, int order) {
  auto c = p.coefficients();
  return TruncatedSeries(std::vector<Rational>(c.begin(), c.end()), order);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise truncation order");
  return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& k) {
  for (auto& a : c_) a *= k;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  TruncatedSeries r(order_);
  const Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries result = constant(1, order_);
  TruncatedSeries base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::euler_derivative() const {
  TruncatedSeries r(order_);
  for (int n = 1; n <= order_; ++n) r.c_[n] = c_[n] * n;
  return r;
}

TruncatedSeries TruncatedSeries::compose_into(const UniPoly& outer) const {
  TruncatedSeries acc(order_);
  auto c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * *this;
    acc.c_[0] += *it;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::compose_into(const TruncatedSeries& outer) const {
  if (c_[0] != 0) throw std::domain_error("series composition needs a zero constant term");
  const int order = std::min(order_, outer.order_);
  const TruncatedSeries inner = truncated(order);
  TruncatedSeries acc(order);
  for (int i = order; i >= 0; --i) {
    acc = acc * inner;
    acc.c_[0] += outer.c_[i];
  }
  return acc;
}

TruncatedSeries tree_series(int order) {
  // [t^n] T = 3 [t^(n-1)] T^2
  TruncatedSeries t(order);
  t[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational sq;
    for (int a = 0; a <= n - 1; ++a) sq += t[a] * t[n - 1 - a];
    t[n] = 3 * sq;
  }
  return t;
}

}  // namespace rootmaps
