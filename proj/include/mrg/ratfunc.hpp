#pragma once

#include <string>

#include "mrg/poly.hpp"

namespace mrg {

// Element of Q(z) in canonical form: monic denominator, gcd(num, den) = 1.
// Equal functions have identical representations, so == is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}      // NOLINT
  // Throws DomainError if den is zero.
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc z() { return RatFunc(Poly::z()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Value of a constant function; throws DomainError otherwise.
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inverse() const;
  // Negative exponents require a nonzero function.
  RatFunc pow(long e) const;
  RatFunc derivative() const;

  // "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace mrg
