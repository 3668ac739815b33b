#pragma once

#include <vector>

#include "rootmaps/arith/partial_fraction.hpp"
#include "rootmaps/arith/series.hpp"

namespace rootmaps {

/// R_g(T) with Q_g(t) = R_g(T(t)), plus the pole data read off it.
struct GenusSeriesRecord {
  int genus = 0;
  PartialFractionForm form;
  int pole_order_at_2 = 0;
  int pole_order_at_minus_2 = 0;
  Rational constant_part;
};

/// R_g in the presentation c_0 + sum alpha_i/(2-T)^i + sum beta_i/(T+2)^i.
/// alpha has 5g-3 entries and beta 3g-2 (index 0 is i = 1); both are empty
/// for g = 0, whose R_0 is the polynomial kept in `polynomial`.
struct GenusSeriesReport {
  int genus = 0;
  Rational c0;
  UniPoly polynomial{Var::T};
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

/// R_0(T) = T(4 - T)/3, the planar series Q_0 = T - t T^3 with t = (T-1)/(3T^2).
GenusSeriesRecord r0();

/// Computes R_g genus by genus from
///   d/dT[(T-1)(T+2)/(3T) R_g] = (T-1)^2/(18T^4) (2D+1)(2D+2)(2D+3) R_{g-1}
///                             + (T-1)^2/(3T^4) sum_{i+j=g, i,j>=1} (2D+1)R_i (2D+1)R_j,
/// integrating from T = 1. Each step checks that no logarithm appears and that
/// the result has poles only at T = 2 (order <= 5g-3) and T = -2 (order <= 3g-2).
///
/// Records are memoized; the object is not safe for concurrent mutation.
class GenusSeries {
 public:
  GenusSeries();

  const GenusSeriesRecord& rg(int genus);
  int computed_genus() const noexcept { return static_cast<int>(records_.size()) - 1; }
  const std::vector<GenusSeriesRecord>& records() const noexcept { return records_; }

  /// Replaces the memo with externally stored forms (R_0 .. R_k). Each form is
  /// rechecked against the ansatz.
  void restore(const std::vector<PartialFractionForm>& forms);

 private:
  const PartialFractionForm& first_order(int genus);
  GenusSeriesRecord next_record(int genus);

  std::vector<GenusSeriesRecord> records_;
  std::vector<PartialFractionForm> first_order_;  // (2D+1) R_h
};

/// Validates the ansatz bounds and fills the derived fields of a record.
GenusSeriesRecord make_record(int genus, PartialFractionForm form);

GenusSeriesReport rg_report(const GenusSeriesRecord& record);

/// Series of Q_g(t) through t^order.
TruncatedSeries genus_series_in_t(const GenusSeriesRecord& record, int order);

}  // namespace rootmaps
