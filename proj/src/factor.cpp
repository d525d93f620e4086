#include "mrg/factor.hpp"

#include <algorithm>
#include <functional>

#include "modp.hpp"
#include "mrg/errors.hpp"

namespace mrg {

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

ZPoly to_z(const modp::Vec& v) { return ZPoly(v.begin(), v.end()); }

modp::Vec to_modp(const ZPoly& a, const modp::Field& F) { return modp::reduce(a, F); }

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Lifts F = g*h (mod p), with F monic mod p^k and g, h monic coprime mod p,
// to F = G*H (mod p^k), G and H monic.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const modp::Vec& g, const modp::Vec& h,
                                    const modp::Field& field, unsigned k) {
  modp::Vec gg, s, t;
  modp::xgcd(g, h, field, gg, s, t);
  ZPoly G = to_z(g), H = to_z(h);
  Integer pj = field.p;
  for (unsigned j = 1; j < k; ++j) {
    Integer pj1 = pj * field.p;
    ZPoly GH = zmul(G, H);
    ZPoly e(std::max(F.size(), GH.size()), 0);
    for (std::size_t i = 0; i < F.size(); ++i) e[i] += F[i];
    for (std::size_t i = 0; i < GH.size(); ++i) e[i] -= GH[i];
    zmod(e, pj1);
    for (auto& c : e) c /= pj;  // exact: F = GH (mod p^j)
    modp::Vec ebar = to_modp(e, field);
    modp::Vec et = modp::mul(ebar, t, field);
    modp::Vec q, dg;
    modp::divmod(et, g, field, q, dg);
    modp::Vec dh = modp::add(modp::mul(ebar, s, field), modp::mul(q, h, field), field);
    ZPoly dgz = to_z(dg), dhz = to_z(dh);
    if (G.size() < dgz.size()) G.resize(dgz.size(), 0);
    if (H.size() < dhz.size()) H.resize(dhz.size(), 0);
    for (std::size_t i = 0; i < dgz.size(); ++i) G[i] += pj * dgz[i];
    for (std::size_t i = 0; i < dhz.size(); ++i) H[i] += pj * dhz[i];
    pj = pj1;
  }
  return {G, H};
}

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient and degree >= 2 into primitive irreducibles over Z.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Integer& lc = f.back();

  // Choose among a handful of admissible primes the one giving the fewest
  // modular factors.
  std::mt19937_64 rng(0x6d7267u);
  std::vector<modp::Vec> best;
  std::uint64_t best_p = 0;
  int admissible = 0;
  for (std::uint64_t p = 3; admissible < 6 && p < (1ull << 31); p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    modp::Field F{p};
    modp::Vec fb = to_modp(f, F);
    if (modp::degree(fb) != n) continue;
    modp::Vec g = modp::gcd(fb, modp::derivative(fb, F), F);
    if (modp::degree(g) != 0) continue;
    ++admissible;
    auto facs = modp::factor_squarefree(fb, F, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  modp::Field F{best_p};
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = Integer(2) * abs(lc) * pow(Integer(2), static_cast<unsigned long>(n)) *
                  (n + 1) * maxc;
  unsigned k = 1;
  Integer pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }

  // Monic image of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  zmod(target, pk);

  std::vector<ZPoly> lifted;
  {
    std::vector<modp::Vec> remaining = best;
    ZPoly current = target;
    while (remaining.size() > 1) {
      modp::Vec g = remaining.front();
      modp::Vec h{1};
      for (std::size_t i = 1; i < remaining.size(); ++i) h = modp::mul(h, remaining[i], F);
      auto [G, H] = hensel_lift(current, g, h, F, k);
      zmod(G, pk);
      zmod(H, pk);
      lifted.push_back(std::move(G));
      current = std::move(H);
      remaining.erase(remaining.begin());
    }
    lifted.push_back(current);
  }

  // Recombination over subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly rest = f;
  Integer half = pk / 2;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const Integer& lcr = rest.back();
      ZPoly cand{lcr};
      for (auto i : idx) {
        cand = zmul(cand, lifted[i]);
        zmod(cand, pk);
      }
      for (auto& c : cand)
        if (c > half) c -= pk;
      trim(cand);
      Poly cp = Poly::from_integer(cand);
      Poly rp = Poly::from_integer(rest);
      auto [quot, remainder] = divmod(rp, cp);
      if (remainder.is_zero()) {
        ZPoly prim = cp.primitive_integer();
        result.push_back(prim);
        rest = divmod(rp, Poly::from_integer(prim)).first.primitive_integer();
        for (std::size_t j = s; j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divmod(f, a).first;
  Poly c = divmod(fp, a).first;
  Poly d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

Factorization factor_poly(const Poly& p) {
  if (p.is_zero()) throw DomainError("factor_poly: zero polynomial");
  Factorization out{p.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    if (part.degree() == 1) {
      out.factors.emplace_back(part, mult);
      continue;
    }
    for (const auto& z : zassenhaus(part.primitive_integer()))
      out.factors.emplace_back(Poly::from_integer(z).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    return canonical_order(x.first, y.first) < 0;
  });
  return out;
}

std::set<Integer> integer_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("integer_roots: zero polynomial");
  std::set<Integer> roots;
  // Integer roots are roots of linear factors z - m with m integral.
  for (const auto& [fac, mult] : factor_poly(p).factors) {
    (void)mult;
    if (fac.degree() != 1) continue;
    Rational root = -fac.coeff(0);
    if (root.get_den() == 1 && p(root) == 0) roots.insert(root.get_num());
  }
  return roots;
}

}  // namespace mrg
