#include "mrg/verify.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mrg/errors.hpp"
#include "mrg/independence.hpp"

namespace mrg {

std::size_t Box::count(std::size_t t) const {
  std::size_t side = static_cast<std::size_t>(hi() - lo() + 1), out = 1;
  for (std::size_t j = 0; j < t; ++j) out *= side;
  return out;
}

long sup_norm(const IntPoint& n) {
  long m = 0;
  for (long x : n) m = std::max(m, x < 0 ? -x : x);
  return m;
}

namespace {

// Runs fn(n, local) over the box, split into contiguous ranges of the first
// coordinate; one Local per worker, returned in range order.
template <typename Local, typename Fn>
std::vector<Local> run_partitioned(const Box& box, std::size_t t, unsigned workers, Fn fn) {
  if (box.N < 0) throw DomainError("box size must be nonnegative");
  if (t == 0) throw DomainError("dimension t must be positive");
  const long lo = box.lo(), hi = box.hi();
  const long side = hi - lo + 1;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(side)));
  std::vector<Local> locals(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto job = [&](unsigned w) {
    try {
      const long first_lo = lo + side * w / workers;
      const long first_hi = lo + side * (w + 1) / workers - 1;
      IntPoint n(t, lo);
      n[0] = first_lo;
      while (n[0] <= first_hi) {
        fn(static_cast<const IntPoint&>(n), locals[w]);
        std::size_t j = t;
        while (j-- > 0) {
          if (j > 0 && n[j] == hi) {
            n[j] = lo;
            continue;
          }
          ++n[j];
          break;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(job, w);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return locals;
}

template <typename T>
void append(std::vector<T>& dst, std::vector<T>& src) {
  dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

struct RationalTerm {
  MPoly<Rational> poly;
  std::vector<Rational> alpha;
};

std::vector<RationalTerm> rational_terms(const MultiRecSpec& spec) {
  std::vector<RationalTerm> out;
  for (const auto& term : spec.terms) out.push_back({to_rational(term.poly), to_rational(term.alpha)});
  return out;
}

Rational power_at(const std::vector<Rational>& alpha, std::span<const long> n) {
  Rational acc = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j) acc *= pow(alpha[j], n[j]);
  return acc;
}

}  // namespace

VerifyReport enumerate_nf_solutions(const MultiRecSpec& spec, const Rational& eps, const Box& box, std::size_t i0,
                                    unsigned workers) {
  if (spec.field != FieldTag::Q) throw DomainError("number-field enumeration needs field Q");
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (spec.terms.empty()) throw DomainError("empty spec");
  if (i0 >= spec.r()) throw DomainError("designated term index out of range");
  const auto terms = rational_terms(spec);
  Rational alpha_max = 0;
  for (const auto& term : terms)
    for (const auto& a : term.alpha) alpha_max = std::max(alpha_max, Rational(abs(a)));
  if (alpha_max <= 1) throw DomainError("no dominant root: max |alpha| must exceed 1");

  const Integer p = eps.get_num();
  if (!p.fits_ulong_p() || !eps.get_den().fits_ulong_p()) throw DomainError("epsilon numerator/denominator too large");
  const unsigned long q = eps.get_den().get_ui();
  const unsigned long pt = p.get_ui() * spec.t;

  struct Local {
    std::vector<NFPoint> solutions;
    std::vector<IntPoint> s1;
    std::size_t points = 0;
  };
  auto locals = run_partitioned<Local>(box, spec.t, workers, [&](const IntPoint& n, Local& acc) {
    ++acc.points;
    Rational G = 0, lead = 0;
    bool lead_zero = false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Rational P = terms[i].poly(n);
      if (P == 0) {
        if (i == i0) lead_zero = true;
        continue;
      }
      Rational v = P * power_at(terms[i].alpha, n);
      G += v;
      if (i == i0) lead = v;
    }
    if (lead_zero) {
      acc.s1.push_back(n);
      return;
    }
    // |G|^q * alpha_max^{|n| t p} < |lead|^q
    const unsigned long e = static_cast<unsigned long>(sup_norm(n)) * pt;
    Rational lhs = pow(Rational(abs(G)), static_cast<long>(q)) * pow(alpha_max, static_cast<long>(e));
    Rational rhs = pow(Rational(abs(lead)), static_cast<long>(q));
    if (lhs < rhs) acc.solutions.push_back(NFPoint{n, G, lead, {}, {}, {}, std::nullopt});
  });

  VerifyReport rep;
  rep.kind = "nf-enumeration";
  rep.params = {{"epsilon", to_string(eps)},
                {"box", box.N},
                {"nonneg", box.nonneg},
                {"t", spec.t},
                {"r", spec.r()},
                {"designated_term", i0 + 1},
                {"alpha_max", to_string(alpha_max)}};
  std::size_t points = 0;
  for (auto& l : locals) {
    append(rep.solutions, l.solutions);
    append(rep.s1_points, l.s1);
    points += l.points;
  }
  std::sort(rep.solutions.begin(), rep.solutions.end(), [](const NFPoint& a, const NFPoint& b) { return a.n < b.n; });
  std::sort(rep.s1_points.begin(), rep.s1_points.end());
  rep.counts["points"] = points;
  rep.counts["solutions"] = rep.solutions.size();
  rep.counts["s1_points"] = rep.s1_points.size();
  rep.pass = true;
  return rep;
}

VerifyReport classify_nf(VerifyReport report, const MultiRecSpec& spec) {
  if (spec.r() > 20) throw DomainError("classify_nf: at most 20 terms supported");
  const auto terms = rational_terms(spec);
  const std::size_t r = terms.size();
  const std::size_t i0 = report.params.value("designated_term", std::size_t{1}) - 1;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < r; ++i)
    if (i != i0) others.push_back(i);

  std::size_t a_count = 0;
  for (auto& pt : report.solutions) {
    std::vector<Rational> vals(r);
    pt.in_S.clear();
    for (std::size_t i = 0; i < r; ++i) {
      Rational P = terms[i].poly(pt.n);
      if (P == 0) pt.in_S.push_back(i);
      vals[i] = P == 0 ? Rational(0) : P * power_at(terms[i].alpha, pt.n);
    }
    std::vector<unsigned long> masks;  // over `others`
    for (unsigned long mask = 0; mask < (1ul << others.size()); ++mask) {
      Rational sum = vals[i0];
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) sum += vals[others[b]];
      if (sum == 0) masks.push_back(mask);
    }
    auto subset = [&](unsigned long mask) {
      std::vector<std::size_t> I{i0};
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) I.push_back(others[b]);
      std::sort(I.begin(), I.end());
      return I;
    };
    // Order subsets by size, then lexicographically.
    std::vector<std::vector<std::size_t>> all, minimal;
    for (unsigned long m : masks) {
      all.push_back(subset(m));
      bool is_min = true;
      for (unsigned long m2 : masks)
        if (m2 != m && (m2 & m) == m2) is_min = false;
      if (is_min) minimal.push_back(subset(m));
    }
    auto by_size = [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; };
    std::sort(all.begin(), all.end(), by_size);
    std::sort(minimal.begin(), minimal.end(), by_size);
    pt.vanishing = std::move(all);
    pt.minimal_vanishing = std::move(minimal);
    pt.in_A = pt.vanishing.empty();
    if (*pt.in_A) ++a_count;
  }
  report.classified = true;
  report.a_count = a_count;
  report.counts["a_members"] = a_count;
  try {
    BoundParamsNF p = nf_params(spec);
    BoundReport b = cor23_bound(p, parse_rational(report.params.at("epsilon").get<std::string>()));
    bool within = b.exact_value ? Integer(a_count) <= *b.exact_value : true;  // log2-only bounds exceed 2^(10^7)
    report.a_bound = std::move(b);
    report.pass = within;
  } catch (const DomainError& e) {
    report.params["a_bound_error"] = e.what();
  }
  return report;
}

VerifyReport verify_ff_growth(const MultiRecSpec& spec, const Place& mu, const Box& box, Mode mode,
                              unsigned workers) {
  if (spec.field != FieldTag::QZ) throw DomainError("growth check needs field Q(z)");
  BoundReport c5 = ff_C5(spec, mode);
  BoundReport c6 = ff_C6(spec, mu, mode);
  const Integer C5 = *c5.exact_value, C6 = *c6.exact_value;
  if (!C6.fits_slong_p()) throw Error("C6 out of range");
  const long c6v = C6.get_si();

  std::vector<std::vector<long>> mu_alpha;
  for (const auto& term : spec.terms) {
    std::vector<long> row;
    for (const auto& a : term.alpha) row.push_back(valuation(a, mu));
    mu_alpha.push_back(std::move(row));
  }

  struct Local {
    std::vector<FFPoint> violations, below;
    std::vector<IntPoint> g_zero;
    std::size_t points = 0, checked = 0, checked_below = 0, p_zero = 0;
  };
  auto locals = run_partitioned<Local>(box, spec.t, workers, [&](const IntPoint& n, Local& acc) {
    ++acc.points;
    for (const auto& term : spec.terms)
      if (term.poly(n).is_zero()) {
        ++acc.p_zero;
        return;
      }
    RatFunc G = evaluate_G(spec, n);
    if (G.is_zero()) {
      acc.g_zero.push_back(n);
      return;
    }
    FFPoint pt;
    pt.n = n;
    pt.mu_G = valuation(G, mu);
    for (const auto& row : mu_alpha) {
      long s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) s += n[j] * row[j];
      pt.term_exponents.push_back(s);
    }
    pt.min_term = *std::min_element(pt.term_exponents.begin(), pt.term_exponents.end());
    pt.rhs = c6v + pt.min_term;
    const bool gated = Integer(sup_norm(n)) >= C5;
    (gated ? acc.checked : acc.checked_below)++;
    if (pt.mu_G > pt.rhs) {
      pt.G = G.to_string();
      (gated ? acc.violations : acc.below).push_back(std::move(pt));
    }
  });

  VerifyReport rep;
  rep.kind = "ff-growth";
  rep.mode = mode;
  rep.params = {{"mu", mu.to_string()}, {"box", box.N}, {"nonneg", box.nonneg}, {"t", spec.t}, {"r", spec.r()}};
  rep.C5 = C5;
  rep.C6 = C6;
  std::size_t points = 0, checked = 0, checked_below = 0, p_zero = 0;
  for (auto& l : locals) {
    append(rep.violations, l.violations);
    append(rep.below_threshold, l.below);
    append(rep.g_zero_points, l.g_zero);
    points += l.points;
    checked += l.checked;
    checked_below += l.checked_below;
    p_zero += l.p_zero;
  }
  rep.counts["points"] = points;
  rep.counts["checked"] = checked;
  rep.counts["checked_below_threshold"] = checked_below;
  rep.counts["skipped_P_zero"] = p_zero;
  rep.counts["skipped_G_zero"] = rep.g_zero_points.size();
  rep.counts["violations"] = rep.violations.size();
  rep.counts["violations_below_threshold"] = rep.below_threshold.size();
  rep.pass = rep.violations.empty();
  return rep;
}

BMReport check_bm(std::span<const RatFunc> us, unsigned genus) {
  const std::size_t n = us.size();
  if (n < 3) throw DomainError("check_bm needs at least 3 elements");
  RatFunc sum;
  for (const auto& u : us) {
    if (u.is_zero()) throw DomainError("check_bm: zero element");
    sum += u;
  }
  if (!sum.is_zero()) throw DomainError("check_bm: the elements do not sum to zero");
  // Every proper subset is independent iff every (n-1)-subset is.
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<RatFunc> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) sub.push_back(us[i]);
    if (constant_rank(sub) != n - 1)
      throw DomainError("check_bm: a proper subset is linearly dependent over the constants");
  }
  BMReport rep;
  rep.lhs = ff_height(us);
  // places where some u_i is not a unit, the infinite one included
  for (const auto& u : us)
    for (const auto& [v, e] : divisor(u)) rep.S.insert(v);
  const long bin = static_cast<long>((n - 1) * (n - 2) / 2);
  rep.rhs = bin * (rep.S.weighted_size() + 2 * static_cast<long>(genus) - 2);
  rep.pass = rep.lhs <= rep.rhs;
  return rep;
}

ZannierReport check_zannier(std::span<const RatFunc> rhos, std::size_t r_idx, const PlaceSet& extra_places, Mode mode,
                            unsigned genus) {
  const std::size_t n = rhos.size();
  if (n == 0) throw DomainError("check_zannier: empty list");
  if (r_idx > n) throw DomainError("check_zannier: r_idx exceeds the number of elements");
  for (const auto& f : rhos)
    if (f.is_zero()) throw DomainError("check_zannier: zero element");
  if (constant_rank(rhos) != n) throw DomainError("check_zannier: elements are linearly dependent over the constants");
  ZannierReport rep;
  for (const auto& f : rhos) rep.delta += f;
  if (rep.delta.is_zero()) throw DomainError("check_zannier: the sum vanishes");

  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [v, e] : divisor(rhos[i]))
      if (e < 0 || i < r_idx) rep.S.insert(v);
  rep.S.merge(extra_places);

  for (const auto& v : rep.S.places()) {
    long m = valuation(rhos[0], v);
    for (std::size_t i = 1; i < n; ++i) m = std::min(m, valuation(rhos[i], v));
    long contrib = v.degree() * (valuation(rep.delta, v) - m);
    rep.per_place.emplace_back(v, contrib);
    rep.lhs += contrib;
  }
  long heights = 0;
  for (std::size_t i = r_idx; i < n; ++i) heights += ff_height(rhos[i]);
  const long nn = static_cast<long>(n);
  const long bin = mode == Mode::AsPrinted ? (nn - 1) * (nn - 2) / 2 : nn * (nn - 1) / 2;
  rep.rhs = heights + bin * (rep.S.weighted_size() + 2 * static_cast<long>(genus) - 2);
  rep.pass = rep.lhs <= rep.rhs;
  return rep;
}

Lemma61Report check_lemma61(std::span<const RatFunc> basis, const IVec& k) {
  if (k.size() != basis.size()) throw DomainError("check_lemma61: one exponent per basis element required");
  if (!relation_lattice(basis).trivial())
    throw DomainError("check_lemma61: basis is not multiplicatively independent modulo constants");
  Lemma61Report rep;
  rep.alpha0 = RatFunc(1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!k[i].fits_slong_p()) throw DomainError("check_lemma61: exponent out of range");
    rep.alpha0 *= basis[i].pow(k[i].get_si());
  }
  rep.bounds = lemma61_bounds(rep.alpha0, basis);
  rep.pass = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (Rational(abs(k[i])) > rep.bounds[i]) rep.pass = false;
  return rep;
}

}  // namespace mrg
