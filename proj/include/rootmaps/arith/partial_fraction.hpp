#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rootmaps/arith/polynomial.hpp"
#include "rootmaps/arith/rational.hpp"
#include "rootmaps/arith/series.hpp"

namespace rootmaps {

/// The only points where the rational functions of T handled here may have
/// poles. Any other denominator factor is rejected with UnsupportedRoot.
enum class Root : std::uint8_t { zero = 0, one = 1, two = 2, minus_two = 3 };

inline constexpr std::array<Root, 4> kRoots{Root::zero, Root::one, Root::two, Root::minus_two};

constexpr int root_value(Root r) {
  switch (r) {
    case Root::zero: return 0;
    case Root::one: return 1;
    case Root::two: return 2;
    case Root::minus_two: return -2;
  }
  return 0;
}

constexpr std::size_t root_index(Root r) { return static_cast<std::size_t>(r); }

/// Throws UnsupportedRoot unless `value` is one of 0, 1, 2, -2.
Root root_from_value(const Rational& value);

/// numerator(T) / prod_a (T - a)^exponents[a], a over kRoots.
struct RationalFunction {
  UniPoly numerator{Var::T};
  std::array<int, 4> exponents{};

  static RationalFunction from_factored(UniPoly numerator,
                                        std::span<const std::pair<Rational, int>> factors);

  UniPoly denominator() const;
  Rational evaluate(const Rational& at) const;
  /// Cancels every (T - a) dividing both numerator and denominator.
  RationalFunction reduced() const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  /// Equality as rational functions (cross-multiplied), not as representations.
  friend bool equivalent(const RationalFunction& a, const RationalFunction& b);
};

struct PoleTerm {
  Root root;
  int order;
  Rational coeff;
};

/// poly(T) + sum gamma_{a,k} / (T - a)^k with monic pole factors.
///
/// Pole coefficients are kept densely per root (index k-1); the highest order
/// stored for a root is always nonzero, and pole_terms() lists only nonzero
/// coefficients. Two forms compare equal iff they are the same function.
class PartialFractionForm {
 public:
  PartialFractionForm() = default;
  explicit PartialFractionForm(UniPoly poly);

  static PartialFractionForm constant(const Rational& c);
  static PartialFractionForm pole(Root a, int order, const Rational& coeff);
  static PartialFractionForm decompose(const RationalFunction& f);

  RationalFunction recombine() const;

  const UniPoly& polynomial_part() const noexcept { return poly_; }
  int pole_order(Root a) const { return static_cast<int>(poles_[root_index(a)].size()); }
  Rational coefficient(Root a, int order) const;
  std::vector<PoleTerm> pole_terms() const;
  bool is_zero() const;

  /// Throws std::domain_error at a pole.
  Rational evaluate(const Rational& at) const;
  PartialFractionForm derivative() const;

  void add_pole(Root a, int order, const Rational& coeff);

  PartialFractionForm& operator+=(const PartialFractionForm& o);
  PartialFractionForm& operator-=(const PartialFractionForm& o);
  PartialFractionForm& operator*=(const Rational& k);

  friend PartialFractionForm operator+(PartialFractionForm a, const PartialFractionForm& b) {
    return a += b;
  }
  friend PartialFractionForm operator-(PartialFractionForm a, const PartialFractionForm& b) {
    return a -= b;
  }
  friend PartialFractionForm operator*(PartialFractionForm a, const Rational& k) { return a *= k; }
  friend PartialFractionForm operator*(const Rational& k, PartialFractionForm a) { return a *= k; }
  friend PartialFractionForm operator*(const PartialFractionForm& a, const PartialFractionForm& b);
  friend bool operator==(const PartialFractionForm& a, const PartialFractionForm& b) = default;

 private:
  void trim(Root a);

  UniPoly poly_{Var::T};
  std::array<std::vector<Rational>, 4> poles_;
};

/// D f = T(1-T)/(T-2) * f'(T), which is t d/dt once T = T(t).
PartialFractionForm pf_apply_D(const PartialFractionForm& f);

/// F with F' = f and F(1) = 0. Throws LogTermPresent if f has a simple pole,
/// PoleAtOne if F would be infinite at T = 1.
PartialFractionForm pf_integrate_from_1(const PartialFractionForm& f);

/// Series in t of f(T(t)) through t^order. Throws PoleAtOne if f has a pole at 1.
TruncatedSeries pf_expand_in_t(const PartialFractionForm& f, int order);

}  // namespace rootmaps
