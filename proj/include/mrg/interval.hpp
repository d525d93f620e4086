#pragma once

#include <mpfr.h>

#include <string>

#include "mrg/rational.hpp"

namespace mrg {

// Closed real interval [lo, hi] with MPFR endpoints rounded outward. Used for
// the logarithms in bound formulas so that upper ends never under-approximate
// the true value.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  Interval();
  static Interval zero(mpfr_prec_t prec);
  Interval(const Rational& x, mpfr_prec_t prec = kDefaultPrecision);  // NOLINT
  Interval(const Integer& x, mpfr_prec_t prec = kDefaultPrecision);   // NOLINT
  Interval(long x, mpfr_prec_t prec = kDefaultPrecision);             // NOLINT
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval e(mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  bool positive() const { return mpfr_sgn(lo_) > 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // b must not contain zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  // Requires a positive interval.
  Interval log() const;
  Interval log2() const;
  Interval exp() const;
  Interval exp2() const;
  static Interval max(const Interval& a, const Interval& b);

  // Smallest integer >= hi, largest integer <= lo.
  Integer ceil_upper() const;
  Integer floor_lower() const;
  double lower_double() const;
  double upper_double() const;
  double mid_double() const;

  std::string to_string(int digits = 12) const;

 private:
  struct PrecTag {};
  Interval(PrecTag, mpfr_prec_t prec);
  mpfr_t lo_, hi_;
};

// log2(x) for x > 0 as an enclosing interval.
Interval log2_of(const Integer& x, mpfr_prec_t prec = Interval::kDefaultPrecision);

// Rounds to 6 decimal places (for report output).
double round6(double v);

}  // namespace mrg
