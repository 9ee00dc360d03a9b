#ifndef PLETHY_RATIONAL_HPP
#define PLETHY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace plethy {

// All coefficient arithmetic in this library is exact: arbitrary-precision
// rationals everywhere, no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical string form: "1", "-3", "2/3", "-1/2".
std::string rational_to_string(const Rational& r);

/// Parses the forms produced by rational_to_string. Throws domain_error on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

Integer factorial(int n);
Integer binomial(long long n, long long k);

// gmpxx has no long long overloads; these go through long (64-bit here).
static_assert(sizeof(long) == sizeof(long long));

inline Integer make_integer(long long v) {
    return Integer(static_cast<long>(v));
}

/// num/den as a canonical exact rational.
inline Rational make_rational(long long num, long long den = 1) {
    return Rational(make_integer(num)) / make_integer(den);
}

}  // namespace plethy

#endif
