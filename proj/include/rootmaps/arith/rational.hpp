#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rootmaps {

// GMP keeps mpq_class canonical after every arithmetic operation; values built
// from a raw numerator/denominator pair must go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p" and "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer pow_integer(long base, unsigned long exponent);

}  // namespace rootmaps
