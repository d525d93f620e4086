#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "mrg/mpoly.hpp"
#include "mrg/ratfunc.hpp"

namespace mrg {

enum class FieldTag { Q, QZ };

std::string to_string(FieldTag f);  // "Q" / "Q(z)"

// One summand P_i(n) * alpha_i^n of a multi-recurrence.
struct Term {
  MPoly<RatFunc> poly;
  std::vector<RatFunc> alpha;
};

// G(n) = sum_i P_i(n) * alpha_i1^n1 * ... * alpha_it^nt.
struct MultiRecSpec {
  FieldTag field = FieldTag::Q;
  std::size_t t = 1;
  std::vector<Term> terms;
  unsigned genus = 0;  // enters bound formulas only

  std::size_t r() const { return terms.size(); }
};

// P_i = sum_l pis[l] * qs[l] with pis linearly independent over the
// constants and qs rational-coefficient polynomials.
struct CoeffDecomp {
  std::vector<RatFunc> pis;
  std::vector<MPoly<Rational>> qs;

  std::size_t rank() const { return pis.size(); }
};

// Validates the document (see README for the format). Throws SpecError
// naming the offending field.
MultiRecSpec load_spec(const nlohmann::json& doc);
MultiRecSpec load_spec_file(const std::filesystem::path& path);

// Programmatic construction with the same validation as load_spec.
void validate(const MultiRecSpec& spec);

RatFunc evaluate_G(const MultiRecSpec& spec, std::span<const long> n);
// P_i(n) * alpha_i^n.
RatFunc evaluate_term(const Term& term, std::span<const long> n);

CoeffDecomp decompose_coeffs(const Term& term);

// Rational views for field-"Q" specs (throws DomainError on nonconstants).
MPoly<Rational> to_rational(const MPoly<RatFunc>& p);
std::vector<Rational> to_rational(std::span<const RatFunc> v);

}  // namespace mrg
