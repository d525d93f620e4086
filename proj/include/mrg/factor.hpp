#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mrg/poly.hpp"

namespace mrg {

struct Factorization {
  Rational leading;
  // Monic irreducible factors over Q with multiplicities, in canonical_order.
  std::vector<std::pair<Poly, unsigned>> factors;
};

// p = leading * prod factor^multiplicity. Squarefree decomposition followed
// by Zassenhaus (modular factorization, Hensel lifting, recombination).
Factorization factor_poly(const Poly& p);

// Squarefree decomposition of a nonzero polynomial: monic pairwise coprime
// squarefree parts s_k with p = lc * prod s_k^k. Parts equal to 1 are omitted.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);

// All integers m with p(m) = 0.
std::set<Integer> integer_roots(const Poly& p);

}  // namespace mrg
