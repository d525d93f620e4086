#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mrg/interval.hpp"
#include "mrg/model.hpp"
#include "mrg/place.hpp"

namespace mrg {

enum class Mode { AsPrinted, Conservative };

std::string to_string(Mode m);  // "as-printed" / "conservative"
Mode parse_mode(const std::string& text);

// Number-field parameters of a field-"Q" spec (K = Q unless d is overridden).
struct BoundParamsNF {
  std::size_t r = 0, t = 0;
  unsigned long d = 1, s = 1;
  std::vector<unsigned> m;  // total degree of each P_i
  unsigned m_max = 0;
  Rational B;               // max |q * a_ij|
  Integer q_lcm = 1;        // lcm of the coefficient denominators
  Rational alpha_max;       // max |alpha_ij|, > 1
};

BoundParamsNF nf_params(const MultiRecSpec& spec, std::optional<unsigned long> d = std::nullopt,
                        std::optional<unsigned long> s = std::nullopt);
// Consistency checks on hand-built parameters (throws DomainError).
void check_params(const BoundParamsNF& p);

struct TauValue {
  std::optional<Rational> T_exact;  // when the logarithms cancel
  Interval T;
  Interval tau;
};

TauValue tau(const Rational& x, const BoundParamsNF& p, mpfr_prec_t prec = Interval::kDefaultPrecision);

struct AConstants {
  Integer A_prime;
  Integer A;
};
AConstants a_constants(const BoundParamsNF& p);

// ceil(k * n! / e), decided with intervals of increasing precision.
Integer ceil_factorial_over_e(unsigned long n, unsigned long k = 1);

struct BoundReport {
  std::string name;
  Mode mode = Mode::AsPrinted;
  std::optional<Integer> exact_value;
  std::optional<Rational> rational_value;  // before the final ceiling
  std::optional<double> log2_value;        // 6 decimals
  // Value = addend + exp(log_natural_exponent) * cofactor (exp-form only).
  std::optional<Integer> log_natural_exponent;
  std::optional<Rational> cofactor;
  std::optional<Integer> addend;
  nlohmann::json inputs = nlohmann::json::object();
};

// Values whose log2 exceeds this are reported in log2-only form.
inline constexpr double kMaxExactBits = 1e7;

BoundReport thm21_bound(const BoundParamsNF& p, const Rational& eps,
                        mpfr_prec_t prec = Interval::kDefaultPrecision);
BoundReport cor23_bound(const BoundParamsNF& p, const Rational& eps,
                        mpfr_prec_t prec = Interval::kDefaultPrecision);
BoundReport rem24_bound(const BoundParamsNF& p, const Rational& eps,
                        mpfr_prec_t prec = Interval::kDefaultPrecision);

// Binomial factor of the function-field constants for D basis elements.
Integer ff_binomial(std::size_t D, Mode mode);

BoundReport ff_C5(const MultiRecSpec& spec, Mode mode);
BoundReport ff_C6(const MultiRecSpec& spec, const Place& mu, Mode mode);
BoundReport ff_C8(const MultiRecSpec& lrs, const Place& mu, Mode mode);

}  // namespace mrg
