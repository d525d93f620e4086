#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrg::modp {

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Vec& a) { return static_cast<int>(a.size()) - 1; }

Vec reduce(const std::vector<Integer>& f, const Field& F) {
  Vec out(f.size());
  Integer m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), F.p);
    out[i] = m.get_ui();
  }
  trim(out);
  return out;
}

Vec add(const Vec& a, const Vec& b, const Field& F) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Vec sub(const Vec& a, const Vec& b, const Field& F) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Vec mul(const Vec& a, const Vec& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  }
  trim(r);
  return r;
}

Vec scale(const Vec& a, u64 c, const Field& F) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const Vec& a, const Vec& b, const Field& F, Vec& q, Vec& r) {
  if (b.empty()) throw std::domain_error("modp division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  std::size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  u64 inv = F.inv(b.back());
  for (std::size_t k = r.size(); k-- > db;) {
    if (!r[k]) continue;
    u64 c = F.mul(r[k], inv);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Vec rem(const Vec& a, const Vec& b, const Field& F) {
  Vec q, r;
  divmod(a, b, F, q, r);
  return r;
}

Vec monic(const Vec& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

Vec gcd(Vec a, Vec b, const Field& F) {
  while (!b.empty()) {
    Vec r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

void xgcd(const Vec& a, const Vec& b, const Field& F, Vec& g, Vec& s, Vec& t) {
  Vec r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    Vec q, r;
    divmod(r0, r1, F, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Vec s2 = sub(s0, mul(q, s1, F), F);
    Vec t2 = sub(t0, mul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = F.inv(r0.back());
  g = scale(r0, inv, F);
  s = scale(s0, inv, F);
  t = scale(t0, inv, F);
}

Vec derivative(const Vec& a, const Field& F) {
  if (a.size() <= 1) return {};
  Vec r(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = F.mul(a[k], k % F.p);
  trim(r);
  return r;
}

Vec powmod(const Vec& base, const Integer& e, const Vec& m, const Field& F) {
  Vec result{1};
  Vec b = rem(base, m, F);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, F), m, F);
  }
  return rem(result, m, F);
}

namespace {

void equal_degree(const Vec& f, int d, const Field& F, std::mt19937_64& rng,
                  std::vector<Vec>& out) {
  int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer q = pow(Integer(F.p), static_cast<unsigned long>(d));
  Integer e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    Vec a(n);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Vec b = sub(powmod(a, e, f, F), Vec{1}, F);
    Vec g = gcd(f, b, F);
    int dg = degree(g);
    if (dg > 0 && dg < n) {
      Vec q2, r;
      divmod(f, g, F, q2, r);
      equal_degree(g, d, F, rng, out);
      equal_degree(monic(q2, F), d, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Vec> factor_squarefree(const Vec& f0, const Field& F, std::mt19937_64& rng) {
  std::vector<Vec> out;
  Vec f = monic(f0, F);
  Vec x{0, 1};
  Vec h = x;
  Integer p(static_cast<unsigned long>(F.p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, p, f, F);
    Vec g = gcd(f, sub(h, x, F), F);
    if (degree(g) > 0) {
      equal_degree(g, d, F, rng, out);
      Vec q, r;
      divmod(f, g, F, q, r);
      f = monic(q, F);
      h = rem(h, f, F);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  return out;
}

}  // namespace mrg::modp
