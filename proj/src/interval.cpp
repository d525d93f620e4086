#include "mrg/interval.hpp"

#include <cmath>
#include <vector>

#include "mrg/errors.hpp"

namespace mrg {

Interval::Interval(PrecTag, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& x, mpfr_prec_t prec) : Interval(PrecTag{}, prec) {
  mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Integer& x, mpfr_prec_t prec) : Interval(PrecTag{}, prec) {
  mpfr_set_z(lo_, x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, x.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(long x, mpfr_prec_t prec) : Interval(PrecTag{}, prec) {
  mpfr_set_si(lo_, x, MPFR_RNDD);
  mpfr_set_si(hi_, x, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(PrecTag{}, o.precision()) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::Interval() : Interval(PrecTag{}, kDefaultPrecision) {}

Interval Interval::zero(mpfr_prec_t prec) { return Interval(PrecTag{}, prec); }

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::e(mpfr_prec_t prec) {
  Interval r(PrecTag{}, prec), one(1L, prec);
  mpfr_exp(r.lo_, one.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, one.hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(Interval::PrecTag{}, std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(Interval::PrecTag{}, std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval r(Interval::PrecTag{}, prec);
  const mpfr_t* as[2] = {&a.lo_, &a.hi_};
  const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(tmp, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
      mpfr_mul(tmp, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(tmp);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw DomainError("interval division by an interval containing 0");
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval inv(Interval::PrecTag{}, prec);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::log() const {
  if (!positive()) throw DomainError("log of a non-positive interval");
  Interval r(PrecTag{}, precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2() const {
  if (!positive()) throw DomainError("log2 of a non-positive interval");
  Interval r(PrecTag{}, precision());
  mpfr_log2(r.lo_, lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(PrecTag{}, precision());
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp2() const {
  Interval r(PrecTag{}, precision());
  mpfr_exp2(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp2(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(PrecTag{}, std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Integer Interval::ceil_upper() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), hi_, MPFR_RNDU);
  return out;
}

Integer Interval::floor_lower() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), lo_, MPFR_RNDD);
  return out;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::to_string(int digits) const {
  auto fmt = [&](const mpfr_t& v, mpfr_rnd_t rnd) {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    std::string spec = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "g";
    mpfr_snprintf(buf.data(), buf.size(), spec.c_str(), v);
    return std::string(buf.data());
  };
  return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

Interval log2_of(const Integer& x, mpfr_prec_t prec) {
  if (x <= 0) throw DomainError("log2 of a non-positive integer");
  return Interval(x, prec).log2();
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace mrg
