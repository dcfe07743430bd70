#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lvlp {

/// Arbitrary-precision integers and rationals. mpq_class keeps every value
/// canonical (coprime, positive denominator) after each operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and finite decimals such as "-0.25" or "1.5e-3";
/// decimals are converted exactly.
Rational parse_rational(std::string_view text);

/// Least common multiple of the denominators.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace lvlp
