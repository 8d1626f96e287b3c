#ifndef WITTSIG_RATIONAL_HPP
#define WITTSIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "wittsig/errors.hpp"

namespace wittsig {

// Arbitrary-precision rationals. GMP keeps results of arithmetic canonical
// (gcd(p,q) = 1, q > 0); only raw string construction needs an explicit
// canonicalization, which parse_rational performs.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" in base 10. Throws ValidationError on malformed input
// or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical decimal form: "p" when q = 1, else "p/q" with q > 0.
std::string rational_to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }

// Largest integer <= x / smallest integer >= x.
Integer rational_floor(const Rational& x);
Integer rational_ceil(const Rational& x);

// x mod 1, result in [0, 1).
Rational mod_one(const Rational& x);

// 2^e as a rational, e may be negative.
Rational pow2(long e);

}  // namespace wittsig

#endif
