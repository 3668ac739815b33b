#include "rootmaps/arith/rational.hpp"

#include <stdexcept>

namespace rootmaps {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text.front() == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("bad rational denominator: " + std::string(text));
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow_integer(long base, unsigned long exponent) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

}  // namespace rootmaps
