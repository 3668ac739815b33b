#pragma once

#include <vector>

#include "rootmaps/arith/biseries.hpp"

namespace rootmaps {

class RecurrenceEngine;

struct LinearSystemReport {
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
};

/// P_g(p, q) such that
///   M_g(x, y) = pq (1 - p - q) P_g(p, q) / ((1 - 2p - 2q)^2 - 4pq)^(5g-3)
/// under x = p(1 - p - 2q), y = q(1 - 2p - q).
struct BivariateRationalRecord {
  int genus = 0;
  /// Coefficients of P_g stored as a series truncated at total degree 6g-6.
  BiSeries pg{0, VarPair::pq};
  int total_degree = -1;
  /// Every M_g^{i,j} with i + j <= fit_degree entered the system.
  int fit_degree = 0;
  LinearSystemReport system;
};

struct FitOptions {
  /// Extra total-degree layers of data beyond 6g-4.
  int surplus_layers = 0;
  /// Seed for permuting the equations before elimination; 0 keeps the natural order.
  unsigned shuffle_seed = 0;
};

struct ValidationReport {
  int checked_degree = 0;
  int entries_checked = 0;
};

/// sum M_g^{i,j} x^i y^j through total degree `order`, rewritten in (p, q).
BiSeries m_series_pq(RecurrenceEngine& engine, int genus, int order);

/// (1 - 2p - 2q)^2 - 4pq truncated at `order`.
BiSeries rational_form_denominator(int order);

/// Undetermined coefficients for P_g, solved exactly. Throws
/// InconsistentSystem, UnderdeterminedSystem, or ConsistencyError when the
/// solution is not symmetric in p and q.
BivariateRationalRecord fit_pg(RecurrenceEngine& engine, int genus, const FitOptions& options = {});

/// The right-hand side of the rational form as a series in (p, q).
BiSeries closed_form_pq(const BivariateRationalRecord& record, int order);

/// The same closed form re-expanded in (x, y).
BiSeries closed_form_xy(const BivariateRationalRecord& record, int order);

/// Compares closed_form_xy through fit_degree + extra_order with fresh
/// m_count values; throws ValidationMismatch at the first difference in
/// (total degree, i) order.
ValidationReport validate_pg(RecurrenceEngine& engine, const BivariateRationalRecord& record, int extra_order);

}  // namespace rootmaps
