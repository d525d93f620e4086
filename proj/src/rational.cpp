#include "mrg/rational.hpp"

#include <algorithm>
#include <cctype>

#include "mrg/errors.hpp"

namespace mrg {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::size_t begin, std::size_t end) {
    std::size_t i = begin;
    if (i < end && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == end) throw ParseError("expected integer", i);
    for (std::size_t j = i; j < end; ++j) {
      if (!std::isdigit(static_cast<unsigned char>(text[j])))
        throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", j);
    }
    std::string digits = text.substr(begin, end - begin);
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(0, text.size()));
  Integer num = parse_int(0, slash);
  Integer den = parse_int(slash + 1, text.size());
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exp);
  }
  auto e = static_cast<unsigned long>(exp);
  Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("factor_integer: zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  split(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> result;
  for (const auto& p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1u);
  }
  return result;
}

Integer rational_height(std::span<const Rational> xs) {
  Integer den_lcm = 1;
  bool nonzero = false;
  for (const auto& x : xs) {
    if (x != 0) nonzero = true;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!nonzero) throw DomainError("height of the zero vector");
  Integer g = 0, best = 0;
  std::vector<Integer> scaled;
  scaled.reserve(xs.size());
  for (const auto& x : xs) {
    Integer v = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(abs(v));
  }
  for (const auto& v : scaled) best = std::max(best, Integer(v / g));
  return best;
}

Integer rational_height(const Rational& a) {
  const Rational pair[2] = {Rational(1), a};
  return rational_height(std::span<const Rational>(pair, 2));
}

}  // namespace mrg
