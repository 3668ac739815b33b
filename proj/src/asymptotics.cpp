#include "rootmaps/asymptotics.hpp"

#include <mpfr.h>

#include <memory>
#include <stdexcept>

#include "rootmaps/errors.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/recurrence.hpp"

namespace rootmaps {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void load_scalar(mpfr_ptr out, const SqrtPiScalar& s, mpfr_prec_t prec) {
  mpfr_set_q(out, s.rational_part.get_mpq_t(), MPFR_RNDN);
  if (s.pi_power == PiPower::minus_half) {
    MpfrValue root_pi(prec);
    mpfr_const_pi(root_pi.get(), MPFR_RNDN);
    mpfr_sqrt(root_pi.get(), root_pi.get(), MPFR_RNDN);
    mpfr_div(out, out, root_pi.get(), MPFR_RNDN);
  }
}

Rational power_of_two(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(p);
}

SqrtPiScalar divide_by_gamma(const Rational& numerator, const HalfIntegerGamma& gamma) {
  SqrtPiScalar s;
  s.rational_part = numerator / gamma.rational_part;
  s.pi_power = gamma.has_sqrt_pi ? PiPower::minus_half : PiPower::zero;
  return s;
}

}  // namespace

std::string SqrtPiScalar::to_string() const {
  if (pi_power == PiPower::zero) return rootmaps::to_string(rational_part);
  const Integer num = rational_part.get_num();
  const Integer den = rational_part.get_den();
  const std::string sqrt_den = den == 1 ? "sqrt(pi)" : "(" + den.get_str() + "*sqrt(pi))";
  return num.get_str() + "/" + sqrt_den;
}

std::string SqrtPiScalar::decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits) * 4 + 64;
  MpfrValue v(prec);
  load_scalar(v.get(), *this, prec);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, v.get());
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

double SqrtPiScalar::to_double() const {
  MpfrValue v(128);
  load_scalar(v.get(), *this, 128);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

HalfIntegerGamma gamma_half(int twice) {
  if (twice < 1) throw std::invalid_argument("Gamma is evaluated at positive half-integers only");
  HalfIntegerGamma g;
  if (twice % 2 == 0) {
    g.rational_part = Rational(factorial(static_cast<unsigned long>(twice / 2 - 1)));
    return g;
  }
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const unsigned long k = static_cast<unsigned long>(twice / 2);
  g.rational_part = make_rational(factorial(2 * k), pow_integer(4, k) * factorial(k));
  g.has_sqrt_pi = true;
  return g;
}

const Rational& AsymptoticConstants::tau(int genus) {
  if (genus < 1) throw std::invalid_argument("tau_g is defined for g >= 1");
  while (static_cast<int>(tau_.size()) <= genus) {
    const int g = static_cast<int>(tau_.size());
    if (g == 1) {
      tau_.emplace_back(1, 3);
      continue;
    }
    Rational acc = make_rational((5 * g - 4) * (5 * g - 6), 3) * tau_[static_cast<std::size_t>(g - 1)];
    Rational conv;
    for (int h = 1; h < g; ++h) conv += tau_[static_cast<std::size_t>(h)] * tau_[static_cast<std::size_t>(g - h)];
    acc += conv / 2;
    tau_.push_back(acc);
  }
  return tau_[static_cast<std::size_t>(genus)];
}

void AsymptoticConstants::restore(const std::vector<Rational>& taus) {
  AsymptoticConstants fresh;
  for (std::size_t g = 1; g <= taus.size(); ++g)
    if (fresh.tau(static_cast<int>(g)) != taus[g - 1])
      throw ConsistencyError("stored tau_" + std::to_string(g) + " disagrees with the recursion");
  tau_ = std::move(fresh.tau_);
}

SqrtPiScalar AsymptoticConstants::tg(int genus) {
  const Rational t = tau(genus);
  return divide_by_gamma(t / power_of_two(5 * genus - 2), gamma_half(5 * genus - 1));
}

Rational tau_from_rg(GenusSeries& series, int genus) {
  if (genus < 1) throw std::invalid_argument("tau_g is defined for g >= 1");
  const GenusSeriesReport rep = rg_report(series.rg(genus));
  const Rational& alpha = rep.alpha.back();
  if (alpha == 0) throw MissingLeadingPole("R_" + std::to_string(genus) + " has no pole of order 5g-3 at T=2");
  return Rational(5 * genus - 3) * alpha;
}

SqrtPiScalar tg_from_alpha(int genus, const Rational& alpha) {
  if (genus < 1) throw std::invalid_argument("t_g is defined for g >= 1");
  return divide_by_gamma(alpha / power_of_two(5 * genus - 3), gamma_half(5 * genus - 3));
}

double asymptotic_ratio(RecurrenceEngine& engine, AsymptoticConstants& constants, int genus, int edges) {
  if (genus < 1) throw std::invalid_argument("asymptotic_ratio needs g >= 1; t_0 is not defined");
  if (edges < 1) throw std::invalid_argument("asymptotic_ratio needs n >= 1");
  const Integer q = engine.q_count(genus, edges);
  const SqrtPiScalar t = constants.tg(genus);
  // Q / (12^n * r) exactly, then the irrational factors n^(5(g-1)/2) and pi^(-1/2).
  const Rational exact = Rational(q) / (Rational(pow_integer(12, static_cast<unsigned long>(edges))) *
                                        t.rational_part);
  const mpfr_prec_t prec = 256;
  MpfrValue v(prec);
  MpfrValue scale(prec);
  mpfr_set_q(v.get(), exact.get_mpq_t(), MPFR_RNDN);
  mpfr_set_si(scale.get(), edges, MPFR_RNDN);
  mpfr_pow_si(scale.get(), scale.get(), 5 * (genus - 1), MPFR_RNDN);
  mpfr_sqrt(scale.get(), scale.get(), MPFR_RNDN);
  mpfr_div(v.get(), v.get(), scale.get(), MPFR_RNDN);
  if (t.pi_power == PiPower::minus_half) {
    mpfr_const_pi(scale.get(), MPFR_RNDN);
    mpfr_sqrt(scale.get(), scale.get(), MPFR_RNDN);
    mpfr_mul(v.get(), v.get(), scale.get(), MPFR_RNDN);
  }
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

}  // namespace rootmaps
