#include "mrg/place.hpp"

#include <algorithm>

#include "mrg/errors.hpp"
#include "mrg/factor.hpp"
#include "mrg/linalg.hpp"

namespace mrg {

Place Place::finite(const Poly& p) {
  if (p.is_zero() || p.degree() < 1) throw DomainError("a place needs a nonconstant polynomial");
  if (p.leading() != 1) throw DomainError("place polynomial is not monic: " + p.to_string());
  auto f = factor_poly(p);
  if (f.factors.size() != 1 || f.factors[0].second != 1)
    throw DomainError("place polynomial is not irreducible over Q: " + p.to_string());
  return Place(p);
}

std::string Place::to_string() const { return poly_ ? poly_->to_string() : "inf"; }

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return canonical_order(a.poly(), b.poly());
}

long PlaceSet::weighted_size() const {
  long w = 0;
  for (const auto& v : places_) w += v.degree();
  return w;
}

namespace {

long multiplicity(Poly f, const Poly& p) {
  long k = 0;
  for (;;) {
    auto [q, r] = divmod(f, p);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

}  // namespace

long valuation(const RatFunc& f, const Place& v) {
  if (f.is_zero()) throw DomainError("valuation of the zero function");
  if (v.is_infinite()) return f.den().degree() - f.num().degree();
  return multiplicity(f.num(), v.poly()) - multiplicity(f.den(), v.poly());
}

Divisor divisor(const RatFunc& f) {
  if (f.is_zero()) throw DomainError("divisor of the zero function");
  Divisor d;
  for (const auto& [p, m] : factor_poly(f.num()).factors) d[Place::finite_unchecked(p)] += m;
  for (const auto& [p, m] : factor_poly(f.den()).factors) d[Place::finite_unchecked(p)] -= m;
  long inf = f.den().degree() - f.num().degree();
  if (inf != 0) d[Place::infinite()] = inf;
  return d;
}

long degree(const Divisor& d) {
  long s = 0;
  for (const auto& [v, e] : d) s += v.degree() * e;
  return s;
}

long ff_height(std::span<const RatFunc> fs) {
  std::vector<RatFunc> nz;
  for (const auto& f : fs)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) throw DomainError("height of the zero vector");
  const PlaceSet places = support(nz, true);
  long h = 0;
  for (const auto& v : places.places()) {
    long m = valuation(nz[0], v);
    for (std::size_t i = 1; i < nz.size(); ++i) m = std::min(m, valuation(nz[i], v));
    h -= v.degree() * m;
  }
  return h;
}

long ff_height(const RatFunc& f) {
  const RatFunc pair[2] = {RatFunc(1), f};
  return ff_height(std::span<const RatFunc>(pair, 2));
}

RatFunc derivative(const RatFunc& f) { return f.derivative(); }

PlaceSet support(std::span<const RatFunc> fs, bool include_infinite) {
  PlaceSet s;
  for (const auto& f : fs)
    for (const auto& [v, e] : divisor(f))
      if (!v.is_infinite()) s.insert(v);
  if (include_infinite) s.insert(Place::infinite());
  return s;
}

std::size_t constant_rank(std::span<const RatFunc> fs) {
  if (fs.empty()) return 0;
  Poly common = 1;
  for (const auto& f : fs) {
    Poly g = gcd(common, f.den());
    common = divmod(common * f.den(), g).first;
  }
  QMatrix m;
  std::size_t width = 0;
  std::vector<Poly> nums;
  for (const auto& f : fs) {
    Poly n = f.num() * divmod(common, f.den()).first;
    width = std::max(width, n.coeffs().size());
    nums.push_back(std::move(n));
  }
  if (width == 0) return 0;
  for (const auto& n : nums) {
    std::vector<Rational> row(width);
    for (std::size_t k = 0; k < width; ++k) row[k] = n.coeff(k);
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

}  // namespace mrg
