#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace iwb {

// mpq_class stays canonical (gcd 1, positive denominator) after arithmetic;
// mpq_class(a, b) does not, see frac.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// num/den in lowest terms.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(Status::Overflow, "integer does not fit in a long");
  return z.get_si();
}

// Largest integer <= r.
Integer floor(const Rational& r);
// Smallest integer >= r.
Integer ceil(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace iwb
