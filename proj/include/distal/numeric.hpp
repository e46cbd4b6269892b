#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "distal/error.hpp"

namespace distal {

// Exact arbitrary-precision scalars. Rational values are kept canonical:
// reduced, positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline int sign_of(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }

inline Integer abs(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// num/den in lowest terms with den > 0.
Rational make_rational(const Integer& num, const Integer& den);

// Largest integer <= r.
Integer rational_floor(const Rational& r);

// Representative of r modulo 1 in [0, 1).
Rational mod1(const Rational& r);

Integer parse_integer(const std::string& text);

// Accepts "p" or "p/q" in base 10.
Rational parse_rational(const std::string& text);

std::string integer_string(const Integer& n);
std::string rational_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace distal
