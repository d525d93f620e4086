#include <algorithm>

#include "mrg/errors.hpp"
#include "mrg/factor.hpp"
#include "mrg/independence.hpp"

namespace mrg {

XPoly::XPoly(const RatFunc& c) {
  if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int XPoly::degree() const {
  if (c_.empty()) throw DomainError("degree of the zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

RatFunc XPoly::operator()(long x) const {
  RatFunc acc;
  RatFunc xv{Rational(x)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xv + *it;
  return acc;
}

XPoly XPoly::z_derivative() const {
  std::vector<RatFunc> d;
  for (const auto& c : c_) d.push_back(c.derivative());
  return XPoly(std::move(d));
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
  std::vector<RatFunc> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return XPoly(std::move(r));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFunc> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return XPoly(std::move(r));
}

std::string XPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[k].to_string();
    if (k == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += "(" + c + ")*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

XPoly exact_div(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw DomainError("XPoly division by zero");
  if (a.is_zero()) return {};
  std::vector<RatFunc> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) throw Error("exact_div: divisor does not divide");
  std::vector<RatFunc> quot(rem.size() - db);
  RatFunc inv = bc.back().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    RatFunc q = rem[k] * inv;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  for (std::size_t k = 0; k < db; ++k)
    if (!rem[k].is_zero()) throw Error("exact_div: divisor does not divide");
  return XPoly(std::move(quot));
}

XPoly determinant(std::vector<std::vector<XPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return XPoly(RatFunc(1));
  // Fraction-free (Bareiss) elimination over Q(z)[x].
  bool negate = false;
  XPoly prev(RatFunc(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = XPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

void require_lrs(const MultiRecSpec& lrs) {
  if (lrs.t != 1) throw DomainError("single-parameter recurrence required (t = 1)");
  if (lrs.field != FieldTag::QZ) throw DomainError("field Q(z) required");
  for (const auto& term : lrs.terms)
    if (term.alpha[0].is_zero()) throw DomainError("zero alpha");
}

}  // namespace

DeltaPoly build_delta(const MultiRecSpec& lrs) {
  require_lrs(lrs);
  DeltaPoly out;
  std::vector<RatFunc> logder;
  for (std::size_t i = 0; i < lrs.r(); ++i) {
    const auto& alpha = lrs.terms[i].alpha[0];
    for (const auto& pi : decompose_coeffs(lrs.terms[i]).pis) {
      out.pis.push_back(pi);
      out.term_of.push_back(i);
      logder.push_back(alpha.derivative() / alpha);
    }
  }
  out.q = out.pis.size();
  out.matrix.assign(out.q, std::vector<XPoly>(out.q));
  const XPoly x = XPoly::x();
  for (std::size_t col = 0; col < out.q; ++col) {
    XPoly cur(out.pis[col]);
    for (std::size_t k = 0; k < out.q; ++k) {
      out.matrix[k][col] = cur;
      cur = cur.z_derivative() + x * XPoly(logder[col]) * cur;
    }
  }
  out.delta = determinant(out.matrix);
  return out;
}

RatFunc wronskian_at(const MultiRecSpec& lrs, long n) {
  require_lrs(lrs);
  std::vector<RatFunc> fns;
  for (const auto& term : lrs.terms) {
    RatFunc an = term.alpha[0].pow(n);
    for (const auto& pi : decompose_coeffs(term).pis) fns.push_back(pi * an);
  }
  const std::size_t q = fns.size();
  std::vector<std::vector<XPoly>> m(q, std::vector<XPoly>(q));
  for (std::size_t col = 0; col < q; ++col) {
    RatFunc f = fns[col];
    for (std::size_t k = 0; k < q; ++k) {
      m[k][col] = XPoly(f);
      f = f.derivative();
    }
  }
  return determinant(std::move(m)).coeff(0);
}

namespace {

std::vector<Integer> roots_of_common(const std::vector<Poly>& polys) {
  Poly g;
  for (const auto& p : polys) g = gcd(g, p);
  if (g.is_zero()) throw DomainError("all polynomials vanish identically");
  auto roots = integer_roots(g);
  return {roots.begin(), roots.end()};
}

long threshold(const std::vector<Integer>& roots) {
  if (roots.empty()) return 0;
  Integer top = *std::max_element(roots.begin(), roots.end());
  if (top < 0) return 0;
  if (!top.fits_slong_p()) throw Error("integer root out of range");
  return top.get_si() + 1;
}

Poly to_univariate(const MPoly<Rational>& q) {
  Poly out;
  for (const auto& [e, c] : q.terms()) out += Poly::monomial(c, e[0]);
  return out;
}

}  // namespace

C7Report c7_threshold(const MultiRecSpec& lrs) {
  require_lrs(lrs);
  C7Report rep;
  std::set<Integer> poly_roots;
  for (const auto& term : lrs.terms) {
    std::vector<Poly> qs;
    for (const auto& q : decompose_coeffs(term).qs) qs.push_back(to_univariate(q));
    for (const auto& r : roots_of_common(qs)) poly_roots.insert(r);
  }
  rep.poly_roots.assign(poly_roots.begin(), poly_roots.end());

  DeltaPoly d = build_delta(lrs);
  if (d.delta.is_zero()) throw DomainError("degenerate system: Delta vanishes identically");
  // Clear z-denominators, then split Delta by powers of z into polynomials in x.
  Poly common = 1;
  for (const auto& c : d.delta.coeffs()) common = divmod(common * c.den(), gcd(common, c.den())).first;
  std::vector<Poly> by_z;
  for (std::size_t k = 0; k < d.delta.coeffs().size(); ++k) {
    const RatFunc& c = d.delta.coeffs()[k];
    Poly n = c.num() * divmod(common, c.den()).first;
    for (std::size_t j = 0; j < n.coeffs().size(); ++j) {
      if (by_z.size() <= j) by_z.resize(j + 1);
      by_z[j] += Poly::monomial(n.coeffs()[j], k);
    }
  }
  rep.delta_roots = roots_of_common(by_z);

  rep.c11 = threshold(rep.poly_roots);
  rep.c12 = threshold(rep.delta_roots);
  rep.c7 = std::max(rep.c11, rep.c12);
  return rep;
}

}  // namespace mrg
