#include "mrg/model.hpp"

#include <fstream>

#include "mrg/errors.hpp"
#include "mrg/linalg.hpp"
#include "mrg/parse.hpp"

namespace mrg {

std::string to_string(FieldTag f) { return f == FieldTag::Q ? "Q" : "Q(z)"; }

namespace {

RatFunc parse_field(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) throw SpecError(path, "expected an expression string");
  try {
    return parse_expr(v.get<std::string>());
  } catch (const Error& e) {
    throw SpecError(path, e.what());
  }
}

long get_int(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SpecError(path, "expected an integer");
  return v.get<long>();
}

}  // namespace

void validate(const MultiRecSpec& spec) {
  if (spec.t < 1) throw SpecError("t", "must be >= 1");
  if (spec.terms.empty()) throw SpecError("terms", "need at least one term");
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const auto& term = spec.terms[i];
    std::string at = "terms[" + std::to_string(i) + "]";
    if (term.alpha.size() != spec.t)
      throw SpecError(at + ".alpha", "dimension mismatch: " + std::to_string(term.alpha.size()) +
                                         " entries, t = " + std::to_string(spec.t));
    if (term.poly.nvars() != spec.t) throw SpecError(at + ".poly", "dimension mismatch");
    if (term.poly.is_zero()) throw SpecError(at + ".poly", "zero polynomial");
    for (std::size_t j = 0; j < spec.t; ++j) {
      const auto& a = term.alpha[j];
      std::string ap = at + ".alpha[" + std::to_string(j) + "]";
      if (a.is_zero()) throw SpecError(ap, "zero alpha");
      if (spec.field == FieldTag::Q && !a.is_constant()) throw SpecError(ap, "non-constant entry under field Q");
    }
    if (spec.field == FieldTag::Q)
      for (const auto& [e, c] : term.poly.terms())
        if (!c.is_constant()) throw SpecError(at + ".poly", "non-constant coefficient under field Q");
  }
}

MultiRecSpec load_spec(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpecError("$", "spec document must be a JSON object");
  MultiRecSpec spec;
  if (!doc.contains("field")) throw SpecError("field", "missing");
  const auto& field = doc["field"];
  if (field == "Q")
    spec.field = FieldTag::Q;
  else if (field == "Q(z)")
    spec.field = FieldTag::QZ;
  else
    throw SpecError("field", "expected \"Q\" or \"Q(z)\"");
  if (!doc.contains("t")) throw SpecError("t", "missing");
  long t = get_int(doc["t"], "t");
  if (t < 1) throw SpecError("t", "must be >= 1");
  spec.t = static_cast<std::size_t>(t);
  if (doc.contains("genus")) {
    long g = get_int(doc["genus"], "genus");
    if (g < 0) throw SpecError("genus", "must be >= 0");
    spec.genus = static_cast<unsigned>(g);
  }
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw SpecError("terms", "expected an array");
  const auto& terms = doc["terms"];
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = "terms[" + std::to_string(i) + "]";
    const auto& jt = terms[i];
    if (!jt.is_object()) throw SpecError(at, "expected an object");
    Term term{MPoly<RatFunc>(spec.t), {}};
    if (!jt.contains("alpha") || !jt["alpha"].is_array()) throw SpecError(at + ".alpha", "expected an array");
    const auto& alpha = jt["alpha"];
    if (alpha.size() != spec.t)
      throw SpecError(at + ".alpha", "dimension mismatch: " + std::to_string(alpha.size()) +
                                         " entries, t = " + std::to_string(spec.t));
    for (std::size_t j = 0; j < alpha.size(); ++j)
      term.alpha.push_back(parse_field(alpha[j], at + ".alpha[" + std::to_string(j) + "]"));
    if (!jt.contains("poly") || !jt["poly"].is_array()) throw SpecError(at + ".poly", "expected an array");
    const auto& poly = jt["poly"];
    for (std::size_t k = 0; k < poly.size(); ++k) {
      std::string mp = at + ".poly[" + std::to_string(k) + "]";
      const auto& mono = poly[k];
      if (!mono.is_object() || !mono.contains("exps") || !mono["exps"].is_array())
        throw SpecError(mp + ".exps", "expected an array");
      const auto& exps = mono["exps"];
      if (exps.size() != spec.t)
        throw SpecError(mp + ".exps", "dimension mismatch: " + std::to_string(exps.size()) +
                                          " entries, t = " + std::to_string(spec.t));
      Exponents e;
      for (std::size_t j = 0; j < exps.size(); ++j) {
        long ej = get_int(exps[j], mp + ".exps[" + std::to_string(j) + "]");
        if (ej < 0) throw SpecError(mp + ".exps[" + std::to_string(j) + "]", "exponent must be >= 0");
        e.push_back(static_cast<unsigned>(ej));
      }
      if (!mono.contains("coeff")) throw SpecError(mp + ".coeff", "missing");
      term.poly.add_term(e, parse_field(mono["coeff"], mp + ".coeff"));
    }
    spec.terms.push_back(std::move(term));
  }
  validate(spec);
  return spec;
}

MultiRecSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string(), "cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(path.string(), std::string("malformed JSON: ") + e.what());
  }
  return load_spec(doc);
}

RatFunc evaluate_term(const Term& term, std::span<const long> n) {
  if (n.size() != term.alpha.size()) throw DomainError("evaluation point has wrong dimension");
  RatFunc v = term.poly(n);
  if (v.is_zero()) return v;
  for (std::size_t j = 0; j < n.size(); ++j) v *= term.alpha[j].pow(n[j]);
  return v;
}

RatFunc evaluate_G(const MultiRecSpec& spec, std::span<const long> n) {
  if (n.size() != spec.t)
    throw DomainError("evaluation point has dimension " + std::to_string(n.size()) + ", expected " +
                      std::to_string(spec.t));
  RatFunc acc;
  for (const auto& term : spec.terms) acc += evaluate_term(term, n);
  return acc;
}

CoeffDecomp decompose_coeffs(const Term& term) {
  if (term.poly.is_zero()) throw DomainError("decompose_coeffs: zero polynomial");
  std::vector<RatFunc> coeffs;
  std::vector<Exponents> monos;
  for (const auto& [e, c] : term.poly.terms()) {
    monos.push_back(e);
    coeffs.push_back(c);
  }
  // Numerator coefficient vectors over a common denominator.
  Poly common = 1;
  for (const auto& c : coeffs) common = divmod(common * c.den(), gcd(common, c.den())).first;
  std::vector<Poly> nums;
  std::size_t width = 0;
  for (const auto& c : coeffs) {
    nums.push_back(c.num() * divmod(common, c.den()).first);
    width = std::max(width, nums.back().coeffs().size());
  }
  auto column = [&](std::size_t k) {
    std::vector<Rational> v(width);
    for (std::size_t i = 0; i < width; ++i) v[i] = nums[k].coeff(i);
    return v;
  };

  // Greedy first-seen basis.
  std::vector<std::size_t> basis;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    QMatrix m;
    for (auto b : basis) m.push_back(column(b));
    m.push_back(column(k));
    if (rank(m) == m.size()) basis.push_back(k);
  }

  CoeffDecomp out;
  QMatrix a(width, std::vector<Rational>(basis.size()));
  for (std::size_t l = 0; l < basis.size(); ++l) {
    out.pis.push_back(coeffs[basis[l]]);
    out.qs.emplace_back(term.poly.nvars());
    auto col = column(basis[l]);
    for (std::size_t i = 0; i < width; ++i) a[i][l] = col[i];
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto x = solve_unique(a, column(k));
    if (!x) throw Error("decompose_coeffs: coefficient outside the computed span");
    for (std::size_t l = 0; l < basis.size(); ++l)
      if ((*x)[l] != 0) out.qs[l].add_term(monos[k], (*x)[l]);
  }
  return out;
}

MPoly<Rational> to_rational(const MPoly<RatFunc>& p) {
  MPoly<Rational> out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.constant_value());
  return out;
}

std::vector<Rational> to_rational(std::span<const RatFunc> v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(x.constant_value());
  return out;
}

}  // namespace mrg
