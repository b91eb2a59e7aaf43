#pragma once

#include <gmpxx.h>

#include <string>

namespace bif {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

// q * 2^k for integer k of either sign.
Rational ldexp(const Rational& q, long k);
Rational pow(const Rational& q, unsigned e);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Round outward to a multiple of 2^-bits.
Rational round_down(const Rational& q, long bits);
Rational round_up(const Rational& q, long bits);

// The rational with smallest denominator in [lo, hi] (lo <= hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

std::string to_string(const Rational& q);

// Smallest integer n >= 0 with n*n >= q (q >= 0).
Integer isqrt_ceil(const Rational& q);

}  // namespace bif
