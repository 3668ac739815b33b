#pragma once

#include <string>
#include <vector>

#include "rootmaps/arith/rational.hpp"

namespace rootmaps {

class GenusSeries;
class RecurrenceEngine;

enum class PiPower { zero, minus_half };

/// rational_part * pi^(0 or -1/2). Exact; decimals appear only through decimal().
struct SqrtPiScalar {
  Rational rational_part;
  PiPower pi_power = PiPower::zero;

  /// "1/24" or "7/(4320*sqrt(pi))".
  std::string to_string() const;
  /// Scientific rendering with `digits` significant digits.
  std::string decimal(int digits) const;
  double to_double() const;

  friend bool operator==(const SqrtPiScalar&, const SqrtPiScalar&) = default;
};

/// Gamma(twice/2) for positive twice, as rational * sqrt(pi)^(twice odd ? 1 : 0).
struct HalfIntegerGamma {
  Rational rational_part;
  bool has_sqrt_pi = false;
};
HalfIntegerGamma gamma_half(int twice);

/// tau_1 = 1/3, tau_g = (5g-4)(5g-6)/3 tau_{g-1} + 1/2 sum_{h=1}^{g-1} tau_h tau_{g-h}.
class AsymptoticConstants {
 public:
  const Rational& tau(int genus);
  /// t_g = tau_g / (2^(5g-2) Gamma((5g-1)/2)).
  SqrtPiScalar tg(int genus);

  /// tau_1, tau_2, ... computed so far.
  std::vector<Rational> computed() const { return {tau_.begin() + 1, tau_.end()}; }
  /// Replaces the memo; every value is checked against the recursion.
  void restore(const std::vector<Rational>& taus);

 private:
  std::vector<Rational> tau_{Rational(0)};
};

/// (5g-3) alpha_{5g-3} from the leading pole of R_g at T = 2.
Rational tau_from_rg(GenusSeries& series, int genus);

/// alpha / (2^(5g-3) Gamma((5g-3)/2)), the second closed form of t_g.
SqrtPiScalar tg_from_alpha(int genus, const Rational& alpha);

/// Q_g^n / (t_g n^(5(g-1)/2) 12^n), exact up to the final conversion.
double asymptotic_ratio(RecurrenceEngine& engine, AsymptoticConstants& constants, int genus, int edges);

}  // namespace rootmaps
