#include "rootmaps/arith/partial_fraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootmaps/errors.hpp"

namespace rootmaps {

namespace {

UniPoly other_factors_at(const std::array<int, 4>& exponents, Root a) {
  // prod_{b != a} (u + a - b)^{e_b} as a polynomial in u = T - a.
  UniPoly r = UniPoly::constant(1, Var::T);
  for (Root b : kRoots) {
    if (b == a || exponents[root_index(b)] == 0) continue;
    r = r * linear_power(Rational(root_value(b) - root_value(a)), exponents[root_index(b)], Var::T);
  }
  return r;
}

UniPoly scaled_by_linear_power(const UniPoly& p, Root a, int k) {
  if (k == 0) return p;
  return p * linear_power(Rational(root_value(a)), k, Var::T);
}

}  // namespace

Root root_from_value(const Rational& value) {
  for (Root r : kRoots)
    if (value == root_value(r)) return r;
  throw UnsupportedRoot("denominator factor (T - " + to_string(value) +
                        ") is outside the supported root set {0, 1, 2, -2}");
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction RationalFunction::from_factored(
    UniPoly numerator, std::span<const std::pair<Rational, int>> factors) {
  if (numerator.var() != Var::T) throw std::invalid_argument("numerator must be a polynomial in T");
  RationalFunction f;
  f.numerator = std::move(numerator);
  for (const auto& [root, exponent] : factors) {
    if (exponent < 0) throw std::invalid_argument("negative denominator exponent");
    f.exponents[root_index(root_from_value(root))] += exponent;
  }
  return f;
}

UniPoly RationalFunction::denominator() const {
  UniPoly d = UniPoly::constant(1, Var::T);
  for (Root a : kRoots) d = scaled_by_linear_power(d, a, exponents[root_index(a)]);
  return d;
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational den = denominator().evaluate(at);
  if (den == 0) throw std::domain_error("rational function evaluated at a pole");
  return numerator.evaluate(at) / den;
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction r = *this;
  if (r.numerator.is_zero()) {
    r.exponents = {};
    return r;
  }
  for (Root a : kRoots) {
    int& e = r.exponents[root_index(a)];
    while (e > 0) {
      auto [q, rem] = divide_linear(r.numerator, Rational(root_value(a)));
      if (rem != 0) break;
      r.numerator = std::move(q);
      --e;
    }
  }
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r;
  r.numerator = a.numerator * b.numerator;
  for (std::size_t i = 0; i < 4; ++i) r.exponents[i] = a.exponents[i] + b.exponents[i];
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r;
  UniPoly na = a.numerator;
  UniPoly nb = b.numerator;
  for (Root root : kRoots) {
    const std::size_t i = root_index(root);
    r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    na = scaled_by_linear_power(na, root, r.exponents[i] - a.exponents[i]);
    nb = scaled_by_linear_power(nb, root, r.exponents[i] - b.exponents[i]);
  }
  r.numerator = na + nb;
  return r;
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator * b.denominator() == b.numerator * a.denominator();
}

// ---------------------------------------------------------------------------
// PartialFractionForm

PartialFractionForm::PartialFractionForm(UniPoly poly) : poly_(std::move(poly)) {
  if (poly_.var() != Var::T) throw std::invalid_argument("polynomial part must be in T");
}

PartialFractionForm PartialFractionForm::constant(const Rational& c) {
  return PartialFractionForm(UniPoly::constant(c, Var::T));
}

PartialFractionForm PartialFractionForm::pole(Root a, int order, const Rational& coeff) {
  PartialFractionForm f;
  f.add_pole(a, order, coeff);
  return f;
}

void PartialFractionForm::add_pole(Root a, int order, const Rational& coeff) {
  if (order < 1) throw std::invalid_argument("pole order must be at least one");
  auto& v = poles_[root_index(a)];
  if (static_cast<int>(v.size()) < order) v.resize(static_cast<std::size_t>(order));
  v[static_cast<std::size_t>(order - 1)] += coeff;
  trim(a);
}

void PartialFractionForm::trim(Root a) {
  auto& v = poles_[root_index(a)];
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Rational PartialFractionForm::coefficient(Root a, int order) const {
  const auto& v = poles_[root_index(a)];
  if (order < 1 || order > static_cast<int>(v.size())) return Rational(0);
  return v[static_cast<std::size_t>(order - 1)];
}

std::vector<PoleTerm> PartialFractionForm::pole_terms() const {
  std::vector<PoleTerm> out;
  for (Root a : kRoots) {
    const auto& v = poles_[root_index(a)];
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) out.push_back({a, static_cast<int>(k) + 1, v[k]});
  }
  return out;
}

bool PartialFractionForm::is_zero() const {
  return poly_.is_zero() && std::all_of(poles_.begin(), poles_.end(),
                                        [](const auto& v) { return v.empty(); });
}

PartialFractionForm PartialFractionForm::decompose(const RationalFunction& f) {
  PartialFractionForm out;
  const UniPoly den = f.denominator();
  auto [quotient, remainder] = divmod(f.numerator, den);
  out.poly_ = std::move(quotient);
  if (remainder.is_zero()) return out;

  for (Root a : kRoots) {
    const int e = f.exponents[root_index(a)];
    if (e == 0) continue;
    const Rational av(root_value(a));
    // Laurent expansion at a: remainder(u + a) / other(u + a) through u^(e-1).
    const TruncatedSeries num = TruncatedSeries::from_polynomial(taylor_shift(remainder, av), e - 1);
    const TruncatedSeries inv =
        TruncatedSeries::from_polynomial(other_factors_at(f.exponents, a), e - 1).inverse();
    const TruncatedSeries local = num * inv;
    auto& v = out.poles_[root_index(a)];
    v.assign(static_cast<std::size_t>(e), Rational(0));
    for (int k = 1; k <= e; ++k) v[static_cast<std::size_t>(k - 1)] = local[e - k];
    out.trim(a);
  }
  return out;
}

RationalFunction PartialFractionForm::recombine() const {
  RationalFunction r;
  for (Root a : kRoots) r.exponents[root_index(a)] = pole_order(a);
  r.numerator = poly_ * r.denominator();
  for (Root a : kRoots) {
    const auto& v = poles_[root_index(a)];
    const int e = static_cast<int>(v.size());
    if (e == 0) continue;
    // sum_k gamma_k (T - a)^(e - k), by Horner in (T - a).
    const UniPoly lin(std::vector<Rational>{Rational(-root_value(a)), Rational(1)}, Var::T);
    UniPoly local(Var::T);
    for (int k = 1; k <= e; ++k)
      local = local * lin + UniPoly::constant(v[static_cast<std::size_t>(k - 1)], Var::T);
    UniPoly other = UniPoly::constant(1, Var::T);
    for (Root b : kRoots)
      if (b != a) other = scaled_by_linear_power(other, b, r.exponents[root_index(b)]);
    r.numerator += local * other;
  }
  return r;
}

Rational PartialFractionForm::evaluate(const Rational& at) const {
  Rational acc = poly_.evaluate(at);
  for (Root a : kRoots) {
    const auto& v = poles_[root_index(a)];
    if (v.empty()) continue;
    const Rational diff = at - root_value(a);
    if (diff == 0) throw std::domain_error("partial fraction form evaluated at a pole");
    const Rational inv = 1 / diff;
    Rational p = inv;
    for (const auto& c : v) {
      acc += c * p;
      p *= inv;
    }
  }
  return acc;
}

PartialFractionForm PartialFractionForm::derivative() const {
  PartialFractionForm d(poly_.derivative());
  for (Root a : kRoots) {
    const auto& v = poles_[root_index(a)];
    auto& w = d.poles_[root_index(a)];
    if (v.empty()) continue;
    w.assign(v.size() + 1, Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k)
      w[k + 1] = -v[k] * static_cast<long>(k + 1);  // gamma/(T-a)^k -> -k gamma/(T-a)^(k+1)
    d.trim(a);
  }
  return d;
}

PartialFractionForm& PartialFractionForm::operator+=(const PartialFractionForm& o) {
  poly_ += o.poly_;
  for (Root a : kRoots) {
    auto& v = poles_[root_index(a)];
    const auto& w = o.poles_[root_index(a)];
    if (w.size() > v.size()) v.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) v[k] += w[k];
    trim(a);
  }
  return *this;
}

PartialFractionForm& PartialFractionForm::operator-=(const PartialFractionForm& o) {
  PartialFractionForm neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

PartialFractionForm& PartialFractionForm::operator*=(const Rational& k) {
  if (k == 0) {
    *this = PartialFractionForm();
    return *this;
  }
  poly_ *= k;
  for (auto& v : poles_)
    for (auto& c : v) c *= k;
  return *this;
}

PartialFractionForm operator*(const PartialFractionForm& a, const PartialFractionForm& b) {
  return PartialFractionForm::decompose(a.recombine() * b.recombine());
}

// ---------------------------------------------------------------------------
// Calculus

PartialFractionForm pf_apply_D(const PartialFractionForm& f) {
  RationalFunction d = f.derivative().recombine();
  d.numerator = d.numerator * UniPoly(std::vector<Rational>{0, 1, -1}, Var::T);
  d.exponents[root_index(Root::two)] += 1;
  return PartialFractionForm::decompose(d.reduced());
}

PartialFractionForm pf_integrate_from_1(const PartialFractionForm& f) {
  for (Root a : kRoots) {
    const Rational residue = f.coefficient(a, 1);
    if (residue != 0) throw LogTermPresent(root_value(a), to_string(residue));
  }
  if (f.pole_order(Root::one) > 0) throw PoleAtOne();

  PartialFractionForm out(antiderivative(f.polynomial_part()));
  for (const PoleTerm& term : f.pole_terms()) {
    // gamma/(T-a)^k integrates to gamma / ((1-k) (T-a)^(k-1)).
    out.add_pole(term.root, term.order - 1, term.coeff / Rational(1 - term.order));
  }
  out -= PartialFractionForm::constant(out.evaluate(Rational(1)));
  return out;
}

TruncatedSeries pf_expand_in_t(const PartialFractionForm& f, int order) {
  if (f.pole_order(Root::one) > 0) throw PoleAtOne();
  const TruncatedSeries tree = tree_series(order);
  TruncatedSeries acc = tree.compose_into(f.polynomial_part());
  for (Root a : kRoots) {
    const int e = f.pole_order(a);
    if (e == 0) continue;
    const TruncatedSeries inv = (tree - TruncatedSeries::constant(root_value(a), order)).inverse();
    TruncatedSeries local(order);
    for (int k = e; k >= 1; --k) {
      local[0] += f.coefficient(a, k);
      local = local * inv;
    }
    acc += local;
  }
  return acc;
}

}  // namespace rootmaps
