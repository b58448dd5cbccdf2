#pragma once
// Exact arithmetic primitives. Everything in the library is built on GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace weylgale {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// floor(sqrt(v)) for v >= 0.
Integer isqrt(const Integer& v);

// lcm of denominators of a rational vector.
Integer common_denominator(const std::vector<Rational>& v);

// gcd of the absolute values of an integer vector (0 for the zero vector).
Integer content(const std::vector<Integer>& v);

long long to_ll(const Integer& z);  // throws std::overflow_error when out of range

}  // namespace weylgale
