#include "doctest.h"

#include <set>

#include "mrg/errors.hpp"
#include "mrg/factor.hpp"
#include "mrg/lattice.hpp"
#include "mrg/linalg.hpp"
#include "mrg/mpoly.hpp"
#include "mrg/parse.hpp"
#include "mrg/poly.hpp"
#include "mrg/rational.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mrg;
using testing_support::F;

namespace {

Rational Q(long p, long q = 1) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

Poly expand(const Factorization& f) {
  Poly acc(f.leading);
  for (const auto& [p, k] : f.factors) acc = acc * p.pow(k);
  return acc;
}

// Rational root test; for degree <= 3 no rational root means irreducible.
bool has_rational_root(const Poly& p) {
  auto c = p.primitive_integer();
  Integer a0 = c.front(), an = c.back();
  if (a0 == 0) return true;
  auto divisors = [](const Integer& n) {
    std::vector<Integer> out;
    Integer m = abs(n);
    for (Integer d = 1; d * d <= m; ++d)
      if (m % d == 0) {
        out.push_back(d);
        out.push_back(m / d);
      }
    return out;
  };
  for (const auto& u : divisors(a0))
    for (const auto& v : divisors(an))
      for (int sgn : {1, -1})
        if (p(Rational(sgn * u, v)) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("parse: literal forms") {
  CHECK(F("z^2 + 1") == RatFunc(Poly({1, 0, 1})));
  RatFunc f = F("(z+1)/(z-1)");
  CHECK(f.num() == Poly({1, 1}));
  CHECK(f.den() == Poly({-1, 1}));
  CHECK(F("3/2 * z / z") == RatFunc(Q(3, 2)));
  CHECK(F("-z^2") == RatFunc(Poly({0, 0, -1})));
  CHECK(F("2^3") == RatFunc(8));
}

TEST_CASE("parse: different spellings agree") {
  CHECK(F("(z^2-1)/(z-1)") == F("z+1"));
  CHECK(F("1/z + 1/z") == F("2/z"));
  CHECK(F("(2*z)/(4*z^2)") == F("1/(2*z)"));
  CHECK(F("  z*z - - 1 ") == F("z^2+1"));
  CHECK(F("(z+1)^3") == F("z^3+3*z^2+3*z+1"));
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(F("z^"), ParseError);
  CHECK_THROWS_AS(F("z^-1"), ParseError);
  CHECK_THROWS_AS(F("z^(2)"), ParseError);
  CHECK_THROWS_AS(F("(z+1"), ParseError);
  CHECK_THROWS_AS(F("y"), ParseError);
  CHECK_THROWS_AS(F("1/(z-z)"), DomainError);
  try {
    F("z + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK(parse_constant("6/4") == Q(3, 2));
  CHECK_THROWS(parse_constant("z"));
}

TEST_CASE("rationals") {
  CHECK(to_string(Q(-6, 4)) == "-3/2");
  CHECK(to_string(Q(4, 2)) == "2");
  CHECK(parse_rational("-3/6") == Q(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK(pow(Q(2, 3), -2) == Q(9, 4));
  CHECK(floor(Q(-3, 2)) == -2);
  CHECK(ceil(Q(-3, 2)) == -1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(3, -1) == 0);
  auto f = factor_integer(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>(2, 3));
  CHECK(f[2] == std::pair<Integer, unsigned>(5, 1));
}

TEST_CASE("poly: division and gcd properties") {
  oracle::Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    Poly a = oracle::random_poly(rng, 7);
    Poly b = oracle::random_poly(rng, 5, false);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
    Poly c = oracle::factored_poly(rng, 3);
    Poly g = gcd(a * c, b * c);
    if (!g.is_zero()) {
      CHECK(divmod(a * c, g).second.is_zero());
      CHECK(divmod(b * c, g).second.is_zero());
      CHECK(divmod(g, c.monic()).second.is_zero());
      CHECK(g.leading() == 1);
    }
    auto x = xgcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
  }
  CHECK_THROWS_AS(divmod(Poly({1, 1}), Poly()), DomainError);
  CHECK_THROWS_AS(Poly().degree(), DomainError);
}

TEST_CASE("poly: rendering and derivative") {
  CHECK(Poly({1, Q(-3, 2), 1}).to_string() == "z^2-3/2*z+1");
  CHECK(Poly({0, 0, 1}).derivative() == Poly({0, 2}));
  CHECK(Poly({Q(1, 2), 1}).content() == Q(1, 2));
}

TEST_CASE("factor_poly: examples") {
  Poly z = Poly::z();
  auto f = factor_poly(z.pow(3) - z);
  CHECK(f.leading == 1);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == z);
  CHECK(f.factors[1].first == z - Poly(1));
  CHECK(f.factors[2].first == z + Poly(1));

  auto g = factor_poly(z * z + Poly(1));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].second == 1u);

  auto h = factor_poly(Poly({1, -4, 4}));
  CHECK(h.leading == 4);
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0] == std::pair<Poly, unsigned>(Poly({Q(-1, 2), 1}), 2));

  // Swinnerton-Dyer style: irreducible over Q but splits mod every prime.
  auto sd = factor_poly(Poly({1, 0, -10, 0, 1}));
  CHECK(sd.factors.size() == 1);
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
  auto sg = factor_poly(Poly({4, 0, 0, 0, 1}));
  CHECK(sg.factors.size() == 2);

  CHECK_THROWS_AS(factor_poly(Poly()), DomainError);
}

TEST_CASE("factor_poly: roundtrip and factor properties on random inputs") {
  oracle::Rng rng(2024);
  for (int it = 0; it < 500; ++it) {
    Poly p = it % 2 ? oracle::factored_poly(rng, 8) : oracle::random_poly(rng, 8, false);
    auto f = factor_poly(p);
    REQUIRE(expand(f) == p);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      const Poly& q = f.factors[k].first;
      CHECK(q.leading() == 1);
      CHECK(q.degree() >= 1);
      if (q.degree() >= 2 && q.degree() <= 3) CHECK_FALSE(has_rational_root(q));
      if (k > 0) CHECK(canonical_order(f.factors[k - 1].first, q) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("squarefree decomposition") {
  oracle::Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    Poly p = oracle::factored_poly(rng, 8);
    auto parts = squarefree_decomposition(p);
    Poly acc(p.leading());
    for (const auto& [s, k] : parts) {
      acc = acc * s.pow(k);
      CHECK(gcd(s, s.derivative()) == Poly(1));
    }
    CHECK(acc == p);
  }
}

TEST_CASE("integer_roots: examples") {
  CHECK(integer_roots(Poly({2, -3, 1})) == std::set<Integer>{1, 2});
  CHECK(integer_roots(Poly({1, 0, 1})).empty());
  CHECK(integer_roots(Poly({-1, 2})).empty());
  CHECK(integer_roots(Poly({0, 0, 1})) == std::set<Integer>{0});
  CHECK_THROWS_AS(integer_roots(Poly()), DomainError);
}

TEST_CASE("integer_roots: complete against a scan") {
  oracle::Rng rng(77);
  for (int it = 0; it < 200; ++it) {
    Poly p = it % 2 ? oracle::factored_poly(rng, 6) : oracle::random_poly(rng, 6, false);
    auto roots = integer_roots(p);
    for (const auto& m : roots) CHECK(p(Rational(m)) == 0);
    // Cauchy bound
    Rational M = 0;
    for (const auto& c : p.coeffs()) M = std::max(M, Rational(abs(c / p.leading())));
    long bound = 1 + ceil(M).get_si();
    std::set<Integer> scanned;
    for (long m = -bound; m <= bound; ++m)
      if (p(Rational(m)) == 0) scanned.insert(m);
    CHECK(roots == scanned);
  }
}

TEST_CASE("MPoly evaluation") {
  MPoly<Rational> p(2);
  p.add_term({1, 1}, 1);
  p.add_term({0, 0}, 1);
  std::vector<long> n{2, 3};
  CHECK(p(n) == 7);

  MPoly<RatFunc> q(1);
  q.add_term({1}, F("z"));
  q.add_term({0}, 1);
  std::vector<long> zero{0};
  CHECK(q(zero) == RatFunc(1));

  MPoly<Rational> s(1);
  s.add_term({2}, 1);
  std::vector<long> m3{-3};
  CHECK(s(m3) == 9);

  std::vector<long> bad{1, 2};
  CHECK_THROWS_AS(s(bad), DomainError);
  CHECK_THROWS_AS(s.add_term({1, 1}, 1), DomainError);
  s.add_term({2}, -1);
  CHECK(s.is_zero());
  CHECK(p.total_degree() == 2);
}

TEST_CASE("rational_height: examples") {
  std::vector<Rational> v{1, Q(3, 2)};
  CHECK(rational_height(v) == 3);
  CHECK(rational_height(Q(5)) == 5);
  CHECK(rational_height(Q(7, 3)) == 7);
  CHECK(rational_height(Q(3, 7)) == 7);
  std::vector<Rational> with_zero{0, Q(-4, 6)};
  CHECK(rational_height(with_zero) == 1);
  std::vector<Rational> zeros{0, 0};
  CHECK_THROWS(rational_height(zeros));
}

TEST_CASE("rational_height: multiplicative laws") {
  oracle::Rng rng(3);
  for (int it = 0; it < 500; ++it) {
    Rational a = oracle::nonzero_rational(rng), b = oracle::nonzero_rational(rng);
    long n = oracle::uniform(rng, -5, 5);
    CHECK(rational_height(a) >= 1);
    CHECK(rational_height(a) == rational_height(Rational(1 / a)));
    CHECK(rational_height(Rational(a + b)) <= 2 * rational_height(a) * rational_height(b));
    CHECK(rational_height(Rational(a * b)) <= rational_height(a) * rational_height(b));
    CHECK(rational_height(pow(a, n)) == pow(rational_height(a), static_cast<unsigned long>(std::labs(n))));
  }
}

TEST_CASE("linear algebra over Q") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  QMatrix a{{1, 1}, {1, -1}, {2, 0}};
  auto x = solve_unique(a, {3, 1, 4});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_unique(a, {3, 1, 5}).has_value());
  CHECK_THROWS_AS(solve_unique(m, {0, 0, 0}), DomainError);

  oracle::Rng rng(8);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    QMatrix r(n, std::vector<Rational>(n));
    for (auto& row : r)
      for (auto& e : row) e = oracle::uniform(rng, -2, 2);
    bool singular = oracle::cofactor_det(r) == 0;
    CHECK((rank(r) < n) == singular);
  }
}

TEST_CASE("integer kernel agrees with brute force") {
  oracle::Rng rng(19);
  for (int it = 0; it < 60; ++it) {
    IMatrix m(2, IVec(4));
    for (auto& row : m)
      for (auto& e : row) e = oracle::uniform(rng, -3, 3);
    IMatrix K = integer_kernel(m, 4);
    CHECK(K == hermite_normal_form(K));
    for (const auto& k : K)
      for (const auto& row : m) {
        Integer dot = 0;
        for (std::size_t j = 0; j < 4; ++j) dot += row[j] * k[j];
        CHECK(dot == 0);
      }
    QMatrix mq;
    for (const auto& row : m) mq.emplace_back(row.begin(), row.end());
    CHECK(K.size() == 4 - rank(mq));
    // Every small integer kernel vector is an integer combination of K.
    oracle::for_each_small_vector(4, 2, [&](const std::vector<long>& v) {
      for (const auto& row : m) {
        Integer dot = 0;
        for (std::size_t j = 0; j < 4; ++j) dot += row[j] * v[j];
        if (dot != 0) return;
      }
      QMatrix kt(4, std::vector<Rational>(K.size()));
      for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) kt[j][i] = K[i][j];
      std::vector<Rational> rhs(v.begin(), v.end());
      auto c = solve_unique(kt, rhs);
      REQUIRE(c.has_value());
      for (const auto& ci : *c) CHECK(ci.get_den() == 1);
    });
  }
}

TEST_CASE("hermite normal form is canonical") {
  IMatrix a{{2, 4}, {0, 3}};
  IMatrix b{{2, 7}, {2, 4}};  // same lattice
  CHECK(hermite_normal_form(a) == hermite_normal_form(b));
  IMatrix h = hermite_normal_form(a);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] > 0);
  CHECK(h[0][1] >= 0);
  CHECK(h[0][1] < h[1][1]);
}
