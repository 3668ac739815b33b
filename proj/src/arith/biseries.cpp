#include "rootmaps/arith/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootmaps {

BiSeries::BiSeries(int degree, VarPair vars)
    : degree_(degree),
      vars_(vars),
      c_(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2) {
  if (degree < 0) throw std::invalid_argument("negative truncation degree");
}

BiSeries BiSeries::constant(const Rational& c, int degree, VarPair vars) {
  BiSeries s(degree, vars);
  s.coeff(0, 0) = c;
  return s;
}

BiSeries BiSeries::monomial(const Rational& c, int i, int j, int degree, VarPair vars) {
  BiSeries s(degree, vars);
  if (i + j <= degree) s.coeff(i, j) = c;
  return s;
}

BiSeries BiSeries::truncated(int degree) const {
  if (degree > degree_) throw std::invalid_argument("cannot raise truncation degree");
  BiSeries r(degree, vars_);
  std::copy(c_.begin(), c_.begin() + static_cast<long>(r.c_.size()), r.c_.begin());
  return r;
}

BiSeries BiSeries::with_vars(VarPair vars) const {
  BiSeries r = *this;
  r.vars_ = vars;
  return r;
}

void BiSeries::check_compatible(const BiSeries& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("bivariate series variable mismatch");
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_compatible(o);
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_compatible(o);
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& k) {
  for (auto& a : c_) a *= k;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.check_compatible(b);
  const int deg = std::min(a.degree_, b.degree_);
  BiSeries r(deg, a.vars_);
  for (int da = 0; da <= deg; ++da) {
    for (int i1 = 0; i1 <= da; ++i1) {
      const Rational& x = a.coeff(i1, da - i1);
      if (x == 0) continue;
      for (int db = 0; da + db <= deg; ++db) {
        for (int i2 = 0; i2 <= db; ++i2) {
          const Rational& y = b.coeff(i2, db - i2);
          if (y == 0) continue;
          r.coeff(i1 + i2, da + db - i1 - i2) += x * y;
        }
      }
    }
  }
  return r;
}

BiSeries BiSeries::inverse() const {
  const Rational& c0 = coeff(0, 0);
  if (c0 == 0) throw std::domain_error("bivariate series with zero constant term is not invertible");
  // 1/(c0 (1 + u)) = (1/c0) sum (-u)^k, with u of valuation >= 1.
  BiSeries u = *this * (1 / c0);
  u.coeff(0, 0) = 0;
  BiSeries acc = constant(1, degree_, vars_);
  for (int k = 0; k < degree_; ++k) {
    acc = acc * u * Rational(-1);
    acc.coeff(0, 0) += 1;
  }
  return acc * (1 / c0);
}

BiSeries BiSeries::pow(unsigned k) const {
  BiSeries result = constant(1, degree_, vars_);
  BiSeries base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BiSeries BiSeries::substitute(const BiSeries& f, const BiSeries& first, const BiSeries& second) {
  first.check_compatible(second);
  if (first.coeff(0, 0) != 0 || second.coeff(0, 0) != 0)
    throw std::domain_error("substituted series must vanish at the origin");
  const int deg = std::min({f.degree_, first.degree_, second.degree_});
  const BiSeries x = first.truncated(deg);
  const BiSeries y = second.truncated(deg);

  std::vector<BiSeries> ypow;
  ypow.push_back(constant(1, deg, x.vars_));
  for (int j = 1; j <= deg; ++j) ypow.push_back(ypow.back() * y);

  // Horner in the first variable: sum_i x^i S_i with S_i = sum_j f_ij y^j.
  BiSeries acc(deg, x.vars_);
  for (int i = deg; i >= 0; --i) {
    acc = acc * x;
    for (int j = 0; i + j <= deg; ++j) {
      const Rational& fij = f.coeff(i, j);
      if (fij == 0) continue;
      for (std::size_t k = 0; k < acc.c_.size(); ++k) {
        if (ypow[j].c_[k] != 0) acc.c_[k] += fij * ypow[j].c_[k];
      }
    }
  }
  return acc;
}

}  // namespace rootmaps
