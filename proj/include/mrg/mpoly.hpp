#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mrg/errors.hpp"
#include "mrg/rational.hpp"

namespace mrg {

using Exponents = std::vector<unsigned>;

// Sparse polynomial in t variables x_1..x_t with coefficients in C (Rational
// or RatFunc). Monomials are kept in descending lexicographic order of their
// exponent vectors, so iteration starts at the "leading" monomial. Zero
// coefficients are never stored.
template <typename C>
class MPoly {
 public:
  using Terms = std::map<Exponents, C, std::greater<>>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^e to the polynomial.
  void add_term(const Exponents& e, const C& c) {
    if (e.size() != nvars_)
      throw DomainError("exponent vector has length " + std::to_string(e.size()) +
                        ", expected " + std::to_string(nvars_));
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == C(0)) terms_.erase(it);
  }

  // Maximum over monomials of the exponent sum; 0 for the zero polynomial.
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }

  // Exact value at an integer point; 0^0 = 1.
  C operator()(std::span<const long> n) const {
    if (n.size() != nvars_)
      throw DomainError("evaluation point has dimension " + std::to_string(n.size()) +
                        ", expected " + std::to_string(nvars_));
    C acc(0);
    for (const auto& [e, c] : terms_) {
      Integer mono = 1;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (e[j] == 0) continue;
        mono *= pow(Integer(n[j]), e[j]);
      }
      acc += c * C(Rational(mono));
    }
    return acc;
  }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  // Renders with variables x1..xt, e.g. "(z)*x1 + 1". `coeff` formats C.
  template <typename F>
  std::string to_string(F coeff) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (e[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(j + 1);
        if (e[j] > 1) mono += "^" + std::to_string(e[j]);
      }
      std::string cs = coeff(c);
      if (mono.empty())
        out += cs;
      else if (cs == "1")
        out += mono;
      else
        out += "(" + cs + ")*" + mono;
    }
    return out;
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace mrg
