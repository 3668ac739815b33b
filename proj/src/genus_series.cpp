#include "rootmaps/genus_series.hpp"

#include <stdexcept>

#include "rootmaps/errors.hpp"

namespace rootmaps {

namespace {

// (2D + c) f
PartialFractionForm two_d_plus(const PartialFractionForm& f, long c) {
  return pf_apply_D(f) * Rational(2) + f * Rational(c);
}

// (T-1)^2 / (scale * T^4)
RationalFunction rhs_prefactor(long scale) {
  RationalFunction r;
  r.numerator = UniPoly(std::vector<Rational>{make_rational(1, scale), make_rational(-2, scale), make_rational(1, scale)},
                        Var::T);
  r.exponents[root_index(Root::zero)] = 4;
  return r;
}

}  // namespace

GenusSeriesRecord r0() {
  return make_record(0, PartialFractionForm(UniPoly(
                            std::vector<Rational>{0, make_rational(4, 3), make_rational(-1, 3)}, Var::T)));
}

GenusSeriesRecord make_record(int genus, PartialFractionForm form) {
  GenusSeriesRecord rec;
  rec.genus = genus;
  if (genus == 0) {
    if (!form.pole_terms().empty())
      throw AnsatzViolation(0, root_value(form.pole_terms().front().root), form.pole_terms().front().order);
  } else {
    for (Root a : {Root::zero, Root::one})
      if (form.pole_order(a) > 0) throw AnsatzViolation(genus, root_value(a), form.pole_order(a));
    if (form.pole_order(Root::two) > 5 * genus - 3)
      throw AnsatzViolation(genus, 2, form.pole_order(Root::two));
    if (form.pole_order(Root::minus_two) > 3 * genus - 2)
      throw AnsatzViolation(genus, -2, form.pole_order(Root::minus_two));
    if (form.polynomial_part().degree() > 0)
      throw AnsatzViolation(genus, AnsatzViolation::kInfinity, form.polynomial_part().degree());
  }
  // R_g(1) = Q_g^0.
  if (form.evaluate(Rational(1)) != (genus == 0 ? 1 : 0))
    throw ConsistencyError("R_" + std::to_string(genus) + "(1) differs from Q_g^0");
  rec.pole_order_at_2 = form.pole_order(Root::two);
  rec.pole_order_at_minus_2 = form.pole_order(Root::minus_two);
  rec.constant_part = form.polynomial_part().coeff(0);
  rec.form = std::move(form);
  return rec;
}

GenusSeries::GenusSeries() { records_.push_back(r0()); }

const PartialFractionForm& GenusSeries::first_order(int genus) {
  while (static_cast<int>(first_order_.size()) <= genus) {
    const int h = static_cast<int>(first_order_.size());
    first_order_.push_back(two_d_plus(rg(h).form, 1));
  }
  return first_order_[static_cast<std::size_t>(genus)];
}

GenusSeriesRecord GenusSeries::next_record(int g) {
  // Right-hand side, assembled as one rational function before decomposing.
  const PartialFractionForm& prev = records_[static_cast<std::size_t>(g - 1)].form;
  const PartialFractionForm third = two_d_plus(two_d_plus(two_d_plus(prev, 3), 2), 1);
  RationalFunction rhs = rhs_prefactor(18) * third.recombine();

  RationalFunction products;
  for (int i = 1; 2 * i <= g; ++i) {
    RationalFunction term = first_order(i).recombine() * first_order(g - i).recombine();
    if (2 * i != g) term.numerator *= Rational(2);
    products = products + term;
  }
  if (g >= 2) rhs = rhs + rhs_prefactor(3) * products;

  const PartialFractionForm integrand = PartialFractionForm::decompose(rhs.reduced());
  const PartialFractionForm integral = pf_integrate_from_1(integrand);

  // R_g = integral * 3T / ((T-1)(T+2)); the (T-1) must cancel exactly.
  RationalFunction r = integral.recombine();
  auto [quotient, remainder] = divide_linear(r.numerator, Rational(1));
  if (remainder != 0) throw AnsatzViolation(g, 1, 1);
  r.numerator = quotient * UniPoly(std::vector<Rational>{0, 3}, Var::T);
  r.exponents[root_index(Root::minus_two)] += 1;
  return make_record(g, PartialFractionForm::decompose(r.reduced()));
}

const GenusSeriesRecord& GenusSeries::rg(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  while (static_cast<int>(records_.size()) <= genus)
    records_.push_back(next_record(static_cast<int>(records_.size())));
  return records_[static_cast<std::size_t>(genus)];
}

void GenusSeries::restore(const std::vector<PartialFractionForm>& forms) {
  std::vector<GenusSeriesRecord> recs;
  for (std::size_t g = 0; g < forms.size(); ++g) recs.push_back(make_record(static_cast<int>(g), forms[g]));
  if (recs.empty() || !(recs.front().form == r0().form))
    throw std::invalid_argument("stored genus series must start with R_0");
  records_ = std::move(recs);
  first_order_.clear();
}

GenusSeriesReport rg_report(const GenusSeriesRecord& record) {
  GenusSeriesReport rep;
  rep.genus = record.genus;
  rep.c0 = record.constant_part;
  rep.polynomial = record.form.polynomial_part();
  if (record.genus == 0) return rep;
  const int g = record.genus;
  // gamma/(T-2)^i = (-1)^i gamma/(2-T)^i
  for (int i = 1; i <= 5 * g - 3; ++i) {
    Rational c = record.form.coefficient(Root::two, i);
    if (i % 2) c = -c;
    rep.alpha.push_back(c);
  }
  for (int i = 1; i <= 3 * g - 2; ++i) rep.beta.push_back(record.form.coefficient(Root::minus_two, i));
  return rep;
}

TruncatedSeries genus_series_in_t(const GenusSeriesRecord& record, int order) {
  return pf_expand_in_t(record.form, order);
}

}  // namespace rootmaps
