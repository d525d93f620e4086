#pragma once

// Dense polynomial arithmetic over GF(p) for word-size odd primes p < 2^31.
// Internal to the factorization code.

#include <cstdint>
#include <random>
#include <vector>

#include "mrg/rational.hpp"

namespace mrg::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;  // coefficient k of z^k, trimmed

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Vec& a);
int degree(const Vec& a);  // -1 for zero; only used internally
Vec reduce(const std::vector<Integer>& f, const Field& F);
Vec add(const Vec& a, const Vec& b, const Field& F);
Vec sub(const Vec& a, const Vec& b, const Field& F);
Vec mul(const Vec& a, const Vec& b, const Field& F);
Vec scale(const Vec& a, u64 c, const Field& F);
void divmod(const Vec& a, const Vec& b, const Field& F, Vec& q, Vec& r);
Vec rem(const Vec& a, const Vec& b, const Field& F);
Vec monic(const Vec& a, const Field& F);
Vec gcd(Vec a, Vec b, const Field& F);
// Returns (g, s, t) with s*a + t*b = g, g monic.
void xgcd(const Vec& a, const Vec& b, const Field& F, Vec& g, Vec& s, Vec& t);
Vec derivative(const Vec& a, const Field& F);
Vec powmod(const Vec& base, const Integer& e, const Vec& m, const Field& F);

// Complete factorization of a monic squarefree polynomial into monic
// irreducibles (distinct-degree then Cantor-Zassenhaus equal-degree split).
std::vector<Vec> factor_squarefree(const Vec& f, const Field& F, std::mt19937_64& rng);

}  // namespace mrg::modp
