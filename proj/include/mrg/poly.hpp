#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mrg/rational.hpp"

namespace mrg {

// Dense univariate polynomial over Q in the variable z. coeffs()[k] is the
// coefficient of z^k; the leading coefficient is nonzero, and the zero
// polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly z() { return Poly({0, 1}); }
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // The zero polynomial has no degree; calling this on it throws DomainError.
  int degree() const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  // Divides by the leading coefficient.
  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned long e) const;

  // Content is the positive rational c with p/c primitive in Z[z].
  Rational content() const;
  // p / content(), with positive leading coefficient.
  std::vector<Integer> primitive_integer() const;
  static Poly from_integer(const std::vector<Integer>& coeffs);

  // Terse infix rendering, e.g. "z^2-3/2*z+1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);

// Deterministic total order: by degree, then coefficients from z^{deg-1}
// down to z^0, each compared by (|c|, negative before positive).
std::strong_ordering canonical_order(const Poly& a, const Poly& b);

}  // namespace mrg
