#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mrg {

using Integer = mpz_class;
// Always canonical: denominator > 0, gcd(num, den) = 1.
using Rational = mpq_class;

std::string to_string(const Integer& x);
// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
Rational parse_rational(const std::string& text);

Integer pow(const Integer& base, unsigned long exp);
// Negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long exp);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);  // 0 when k < 0, n < 0 or k > n

// Prime factorization of |n| (n != 0), ascending primes with multiplicity.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Multiplicative height over Q: max |x_i| of the primitive integer vector
// proportional to x. Zero entries are allowed if some entry is nonzero.
Integer rational_height(std::span<const Rational> xs);
// H(a) := H((1, a)) = max(|num a|, den a).
Integer rational_height(const Rational& a);

}  // namespace mrg
