#include "mrg/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mrg/errors.hpp"
#include "mrg/independence.hpp"

namespace mrg {

std::string to_string(Mode m) { return m == Mode::AsPrinted ? "as-printed" : "conservative"; }

Mode parse_mode(const std::string& text) {
  if (text == "as-printed") return Mode::AsPrinted;
  if (text == "conservative") return Mode::Conservative;
  throw DomainError("unknown mode '" + text + "' (expected as-printed or conservative)");
}

namespace {

std::map<Integer, long> prime_exponents(const Rational& x) {
  std::map<Integer, long> out;
  for (const auto& [p, e] : factor_integer(abs(x.get_num()))) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : factor_integer(x.get_den())) out[p] -= static_cast<long>(e);
  return out;
}

// c with ln x = c ln a, if it exists (x, a > 0, a != 1).
std::optional<Rational> log_ratio(const Rational& x, const Rational& a) {
  auto ex = prime_exponents(x), ea = prime_exponents(a);
  std::optional<Rational> c;
  for (const auto& [p, e] : ea) {
    auto it = ex.find(p);
    Rational ratio(it == ex.end() ? 0L : it->second, e);
    ratio.canonicalize();
    if (c && *c != ratio) return std::nullopt;
    c = ratio;
  }
  for (const auto& [p, e] : ex)
    if (!ea.contains(p)) return std::nullopt;
  return c;
}

unsigned long to_ulong(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw Error(std::string(what) + " out of range");
  return x.get_ui();
}

// log2(2^a + 2^b) from intervals for a and b.
Interval log2_sum(const Interval& a, const Interval& b) {
  const Interval& big = mpfr_greaterequal_p(a.hi(), b.hi()) ? a : b;
  const Interval& small = &big == &a ? b : a;
  Interval diff = small - big;  // at most ~0 on the high side
  Interval one(1L, a.precision());
  return big + (one + diff.exp2()).log2();
}

nlohmann::json params_json(const BoundParamsNF& p) {
  nlohmann::json m = nlohmann::json::array();
  for (unsigned mi : p.m) m.push_back(mi);
  return {{"r", p.r},
          {"t", p.t},
          {"d", p.d},
          {"s", p.s},
          {"m", m},
          {"m_max", p.m_max},
          {"B", to_string(p.B)},
          {"q_lcm", to_string(p.q_lcm)},
          {"alpha_max", to_string(p.alpha_max)}};
}

double log2_report(const Integer& v) { return round6(log2_of(v).mid_double()); }

struct Thm21Parts {
  Integer first;                  // (ceil tau + 1)^t
  Interval tau;
  Integer tau_ceil;
  Integer A;
  std::optional<Rational> second;  // the subspace-count summand, exact
  Interval log2_second;
};

Interval log2_subspace(const BoundParamsNF& p, const Rational& eps, mpfr_prec_t prec) {
  // s * (60 r^2 + 7r log2(22d / (10 eps)))
  Rational base = Rational(22 * Integer(p.d)) / (10 * eps);
  Interval per = Interval(Integer(Integer(60) * p.r * p.r), prec) + Interval(Integer(Integer(7) * p.r), prec) * Interval(base, prec).log2();
  return Interval(Integer(p.s), prec) * per;
}

Rational subspace_exact(const BoundParamsNF& p, const Rational& eps) {
  Rational base = Rational(22 * Integer(p.d)) / (10 * eps);
  base.canonicalize();
  Rational per = Rational(pow(Integer(2), 60ul * p.r * p.r)) * pow(base, static_cast<long>(7 * p.r));
  return pow(per, static_cast<long>(p.s));
}

Thm21Parts thm21_parts(const BoundParamsNF& p, const Rational& eps, mpfr_prec_t prec) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  check_params(p);
  Thm21Parts out;
  Rational x = eps / (2 * Integer(p.d));
  x.canonicalize();
  TauValue tv = tau(x, p, prec);
  out.tau = tv.tau;
  out.tau_ceil = tv.tau.ceil_upper();
  out.first = pow(out.tau_ceil + 1, p.t);

  AConstants ac = a_constants(p);
  out.A = ac.A;
  const Integer A2 = out.A * out.A, A3 = A2 * out.A;
  const Integer cfe = ceil_factorial_over_e(p.r);
  out.log2_second = log2_of(cfe, prec) + Interval(Integer(35 * A3), prec) +
                    Interval(Integer(6 * A2), prec) * Interval(Integer(p.d), prec).log2() + Interval(1L, prec) +
                    log2_subspace(p, eps, prec);
  if (out.log2_second.upper_double() + static_cast<double>(p.r) < kMaxExactBits) {
    Rational second = Rational(cfe) * Rational(pow(Integer(2), to_ulong(35 * A3, "exponent"))) *
                      Rational(pow(Integer(p.d), to_ulong(6 * A2, "exponent"))) * 2 * subspace_exact(p, eps);
    second.canonicalize();
    out.second = second;
  }
  return out;
}

BoundReport assemble(const std::string& name, const BoundParamsNF& p, const Rational& eps, const Thm21Parts& parts,
                     unsigned long extra_pow2, mpfr_prec_t prec) {
  BoundReport rep;
  rep.name = name;
  rep.mode = Mode::AsPrinted;
  rep.inputs = params_json(p);
  rep.inputs["epsilon"] = to_string(eps);
  rep.inputs["A"] = to_string(parts.A);
  rep.inputs["tau_ceil"] = to_string(parts.tau_ceil);
  rep.inputs["first_summand"] = to_string(parts.first);
  if (parts.second) {
    Rational v = (Rational(parts.first) + *parts.second) * Rational(pow(Integer(2), extra_pow2));
    v.canonicalize();
    rep.rational_value = v;
    rep.exact_value = ceil(v);
    rep.log2_value = log2_report(*rep.exact_value);
  } else {
    Interval l = log2_sum(log2_of(parts.first, prec), parts.log2_second) + Interval(static_cast<long>(extra_pow2), prec);
    rep.log2_value = round6(l.mid_double());
  }
  return rep;
}

}  // namespace

void check_params(const BoundParamsNF& p) {
  if (p.r < 1) throw DomainError("r must be at least 1");
  if (p.t < 1) throw DomainError("t must be at least 1");
  if (p.d < 1) throw DomainError("d must be at least 1");
  if (p.s < 1) throw DomainError("s must be at least 1");
  if (p.m.size() != p.r) throw DomainError("one total degree per term required");
  if (p.alpha_max <= 1) throw DomainError("no dominant root: max |alpha| must exceed 1");
  if (p.B <= 0) throw DomainError("B must be positive");
}

BoundParamsNF nf_params(const MultiRecSpec& spec, std::optional<unsigned long> d, std::optional<unsigned long> s) {
  if (spec.field != FieldTag::Q) throw DomainError("number-field bounds need field Q");
  if (spec.terms.empty()) throw DomainError("empty spec");
  BoundParamsNF p;
  p.r = spec.r();
  p.t = spec.t;
  std::set<Integer> primes;
  std::vector<Rational> coeffs;
  for (const auto& term : spec.terms) {
    p.m.push_back(term.poly.total_degree());
    p.m_max = std::max(p.m_max, p.m.back());
    const MPoly<Rational> rp = to_rational(term.poly);
    for (const auto& [e, c] : rp.terms()) coeffs.push_back(c);
    for (const auto& a : to_rational(term.alpha)) {
      if (a == 0) throw DomainError("zero alpha");
      p.alpha_max = std::max(p.alpha_max, Rational(abs(a)));
      for (const auto* part : {&a.get_num(), &a.get_den()})
        for (const auto& [q, e] : factor_integer(abs(*part))) primes.insert(q);
    }
  }
  if (p.alpha_max <= 1) throw DomainError("no dominant root: max |alpha| must exceed 1");
  if (coeffs.empty()) throw DomainError("all coefficients vanish");
  for (const auto& c : coeffs) p.q_lcm = lcm(p.q_lcm, Integer(c.get_den()));
  p.B = 0;
  for (const auto& c : coeffs) p.B = std::max(p.B, Rational(abs(c * p.q_lcm)));
  p.d = d.value_or(1);
  p.s = s.value_or(1 + primes.size());
  check_params(p);
  return p;
}

TauValue tau(const Rational& x, const BoundParamsNF& p, mpfr_prec_t prec) {
  if (x <= 0) throw DomainError("tau: x must be positive");
  check_params(p);
  const Rational X = Rational(pow(Integer(2), p.m_max + p.t)) * p.B;
  const Rational scale = Rational(20 * Integer(p.r) * p.d) / (x * Integer(p.t));
  TauValue out{std::nullopt, Interval::zero(prec), Interval::zero(prec)};
  auto c = log_ratio(X, p.alpha_max);
  const Interval ln_alpha = Interval(p.alpha_max, prec).log();
  if (c && p.m_max == 0) {
    Rational T = scale * *c;
    T.canonicalize();
    out.T_exact = T;
    out.T = Interval(T, prec);
  } else {
    Interval lnX = c ? Interval(*c, prec) * ln_alpha : Interval(X, prec).log();
    out.T = Interval(scale, prec) * (Interval(Integer(p.m_max), prec) + lnX) / ln_alpha;
  }
  const Interval ten(10L, prec);
  if (mpfr_cmp_ui(out.T.hi(), 1) <= 0) {
    out.tau = ten;  // 2T log T <= 0
  } else {
    out.tau = Interval::max(ten, Interval(2L, prec) * out.T * out.T.log());
  }
  return out;
}

AConstants a_constants(const BoundParamsNF& p) {
  AConstants out{0, 0};
  bool all_const = true;
  for (unsigned mi : p.m) {
    out.A_prime += binomial(static_cast<long>(p.t + mi), static_cast<long>(p.t));
    if (mi != 0) all_const = false;
  }
  out.A = all_const ? Integer(std::max(p.t, p.r)) : out.A_prime;
  return out;
}

Integer ceil_factorial_over_e(unsigned long n, unsigned long k) {
  if (k == 0) return 0;
  const Integer num = factorial(n) * k;
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    Interval q = Interval(num, prec) / Interval::e(prec);
    Integer lo = q.floor_lower(), hi = q.ceil_upper();
    // k n!/e is irrational for n >= 1, so a tight enclosure pins the ceiling.
    if (hi - lo == 1) return hi;
    if (prec > (1 << 20)) throw Error("ceil_factorial_over_e: precision escalation failed");
  }
}

BoundReport thm21_bound(const BoundParamsNF& p, const Rational& eps, mpfr_prec_t prec) {
  return assemble("thm21", p, eps, thm21_parts(p, eps, prec), 0, prec);
}

BoundReport cor23_bound(const BoundParamsNF& p, const Rational& eps, mpfr_prec_t prec) {
  return assemble("cor23", p, eps, thm21_parts(p, eps, prec), p.r - 1, prec);
}

BoundReport rem24_bound(const BoundParamsNF& p, const Rational& eps, mpfr_prec_t prec) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  check_params(p);
  for (unsigned mi : p.m)
    if (mi != 0) throw DomainError("rem24 needs constant coefficient polynomials (all m_i = 0)");
  BoundReport rep;
  rep.name = "rem24";
  rep.inputs = params_json(p);
  rep.inputs["epsilon"] = to_string(eps);

  Rational x = eps / (2 * Integer(p.d));
  x.canonicalize();
  TauValue tv = tau(x, p, prec);
  Integer tau_ceil = tv.tau.ceil_upper();
  rep.addend = pow(tau_ceil + 1, p.t);
  rep.inputs["tau_ceil"] = to_string(tau_ceil);

  // (6(r-1))^{3(r-1)} with 0^0 = 1.
  const unsigned long r1 = p.r - 1;
  Integer N = pow(Integer(6 * r1), 3 * r1) * (Integer(p.r) * (p.s - 1) + 1);
  rep.log_natural_exponent = N;

  const Integer cfe = ceil_factorial_over_e(p.r, 2);
  Interval log2_cof = log2_of(cfe, prec) + log2_subspace(p, eps, prec);
  if (log2_cof.upper_double() < kMaxExactBits) {
    Rational cof = Rational(cfe) * subspace_exact(p, eps);
    cof.canonicalize();
    rep.cofactor = cof;
  }
  Interval log2_e = Interval::e(prec).log2();
  Interval total = log2_sum(log2_of(*rep.addend, prec), Interval(N, prec) * log2_e + log2_cof);
  rep.log2_value = round6(total.mid_double());
  return rep;
}

Integer ff_binomial(std::size_t D, Mode mode) {
  const long n = static_cast<long>(D);
  return mode == Mode::AsPrinted ? binomial(n - 1, 2) : binomial(n, 2);
}

namespace {

void require_ff(const MultiRecSpec& spec) {
  if (spec.field != FieldTag::QZ) throw DomainError("function-field constants need field Q(z)");
  if (spec.terms.empty()) throw DomainError("empty spec");
  validate(spec);
}

struct FFData {
  std::vector<CoeffDecomp> decomps;
  std::size_t D = 0;
};

FFData ff_data(const MultiRecSpec& spec) {
  FFData out;
  for (const auto& term : spec.terms) {
    out.decomps.push_back(decompose_coeffs(term));
    out.D += out.decomps.back().rank();
  }
  return out;
}

nlohmann::json places_json(const PlaceSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : s.places()) arr.push_back(v.to_string());
  return arr;
}

long clamped_factor(const PlaceSet& s, unsigned genus) {
  return std::max(0L, s.weighted_size() + 2 * static_cast<long>(genus) - 2);
}

BoundReport small_report(const std::string& name, Mode mode, const Integer& value) {
  BoundReport rep;
  rep.name = name;
  rep.mode = mode;
  rep.exact_value = value;
  rep.rational_value = Rational(value);
  if (value > 0) rep.log2_value = log2_report(value);
  return rep;
}

long max_mu_pi(const FFData& data, const Place& mu) {
  bool first = true;
  long best = 0;
  for (const auto& dec : data.decomps)
    for (const auto& pi : dec.pis) {
      long v = valuation(pi, mu);
      if (first || v > best) best = v;
      first = false;
    }
  return best;
}

}  // namespace

BoundReport ff_C5(const MultiRecSpec& spec, Mode mode) {
  require_ff(spec);
  if (spec.r() == 1) {
    BoundReport rep = small_report("C5", mode, 0);
    rep.inputs = {{"r", 1}, {"t", spec.t}};
    return rep;
  }
  for (const auto& pr : pairwise_independent(spec))
    if (!pr.independent)
      throw DomainError("alpha_" + std::to_string(pr.i + 1) + " and alpha_" + std::to_string(pr.j + 1) +
                        " are multiplicatively dependent modulo constants");
  FFData data = ff_data(spec);

  std::vector<RatFunc> gens;
  for (std::size_t i = 0; i < spec.r(); ++i) {
    gens.insert(gens.end(), spec.terms[i].alpha.begin(), spec.terms[i].alpha.end());
    gens.insert(gens.end(), data.decomps[i].pis.begin(), data.decomps[i].pis.end());
  }
  PlaceSet S = support(gens, true);

  Integer pair_max = 0;
  long pi_max = 0;
  for (std::size_t i = 0; i < spec.r(); ++i) {
    for (std::size_t j = i + 1; j < spec.r(); ++j) {
      Integer prod = 1;
      for (std::size_t l = 0; l < spec.t; ++l) prod *= ff_height(spec.terms[i].alpha[l] / spec.terms[j].alpha[l]);
      pair_max = std::max(pair_max, prod);
      for (const auto& a : data.decomps[i].pis)
        for (const auto& b : data.decomps[j].pis) pi_max = std::max(pi_max, ff_height(a / b));
    }
  }
  const Integer bin = ff_binomial(data.D, mode);
  const long factor = clamped_factor(S, spec.genus);
  Integer value = factorial(spec.r() + 1) * pair_max * (pi_max + bin * factor);

  BoundReport rep = small_report("C5", mode, value);
  rep.inputs = {{"r", spec.r()},
                {"t", spec.t},
                {"D", data.D},
                {"genus", spec.genus},
                {"S", places_json(S)},
                {"weighted_S", S.weighted_size()},
                {"pair_height_product", to_string(pair_max)},
                {"max_pi_ratio_height", pi_max},
                {"binomial", to_string(bin)}};
  return rep;
}

BoundReport ff_C6(const MultiRecSpec& spec, const Place& mu, Mode mode) {
  require_ff(spec);
  FFData data = ff_data(spec);
  std::vector<RatFunc> gens;
  for (std::size_t i = 0; i < spec.r(); ++i) {
    gens.insert(gens.end(), spec.terms[i].alpha.begin(), spec.terms[i].alpha.end());
    gens.insert(gens.end(), data.decomps[i].pis.begin(), data.decomps[i].pis.end());
  }
  PlaceSet S = support(gens, true);
  S.insert(mu);
  const long mu_max = max_mu_pi(data, mu);
  const Integer bin = ff_binomial(data.D, mode);
  Integer value = mu_max + bin * clamped_factor(S, spec.genus);

  BoundReport rep = small_report("C6", mode, value);
  rep.inputs = {{"mu", mu.to_string()},
                {"D", data.D},
                {"genus", spec.genus},
                {"S", places_json(S)},
                {"weighted_S", S.weighted_size()},
                {"max_mu_pi", mu_max},
                {"binomial", to_string(bin)}};
  return rep;
}

BoundReport ff_C8(const MultiRecSpec& lrs, const Place& mu, Mode mode) {
  require_ff(lrs);
  if (lrs.t != 1) throw DomainError("C8 needs a single-parameter recurrence (t = 1)");
  FFData data = ff_data(lrs);
  std::vector<RatFunc> gens;
  for (const auto& term : lrs.terms) {
    gens.push_back(term.alpha[0]);
    for (const auto& [e, c] : term.poly.terms()) gens.push_back(c);
  }
  PlaceSet S = support(gens, true);
  S.insert(mu);
  const long mu_max = max_mu_pi(data, mu);
  const Integer bin = ff_binomial(data.D, mode);
  Integer value = mu_max + bin * clamped_factor(S, lrs.genus);

  BoundReport rep = small_report("C8", mode, value);
  rep.inputs = {{"mu", mu.to_string()},
                {"q", data.D},
                {"genus", lrs.genus},
                {"S", places_json(S)},
                {"weighted_S", S.weighted_size()},
                {"max_mu_pi", mu_max},
                {"binomial", to_string(bin)}};
  try {
    C7Report c7 = c7_threshold(lrs);
    rep.inputs["C7"] = c7.c7;
    rep.inputs["C11"] = c7.c11;
    rep.inputs["C12"] = c7.c12;
  } catch (const DomainError& e) {
    rep.inputs["C7"] = nullptr;
    rep.inputs["C7_error"] = e.what();
  }
  return rep;
}

}  // namespace mrg
