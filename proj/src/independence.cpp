#include "mrg/independence.hpp"

#include <map>

#include "mrg/errors.hpp"
#include "mrg/linalg.hpp"

namespace mrg {

namespace {

RatFunc power_product(std::span<const RatFunc> fs, const IVec& k) {
  RatFunc acc(1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (k[i] == 0) continue;
    if (!k[i].fits_slong_p()) throw Error("relation exponent out of range");
    acc *= fs[i].pow(k[i].get_si());
  }
  return acc;
}

Rational power_product(std::span<const Rational> xs, const IVec& k) {
  Rational acc(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (k[i] == 0) continue;
    acc *= pow(xs[i], k[i].get_si());
  }
  return acc;
}

}  // namespace

KernelBasis relation_lattice(std::span<const RatFunc> fs) {
  for (const auto& f : fs)
    if (f.is_zero()) throw DomainError("relation_lattice: zero element");
  std::vector<Divisor> divs;
  PlaceSet places;
  for (const auto& f : fs) {
    divs.push_back(divisor(f));
    for (const auto& [v, e] : divs.back()) places.insert(v);
  }
  IMatrix m;
  for (const auto& v : places.places()) {
    IVec row;
    for (const auto& d : divs) {
      auto it = d.find(v);
      row.emplace_back(it == d.end() ? 0L : it->second);
    }
    m.push_back(std::move(row));
  }
  KernelBasis out{integer_kernel(m, fs.size())};
  for (const auto& k : out.vectors)
    if (!power_product(fs, k).is_constant())
      throw Error("relation_lattice: kernel vector failed verification");
  return out;
}

std::vector<PairReport> pairwise_independent(const MultiRecSpec& spec) {
  if (spec.field != FieldTag::QZ) throw DomainError("pairwise_independent needs field Q(z)");
  std::vector<PairReport> out;
  for (std::size_t i = 0; i < spec.r(); ++i) {
    for (std::size_t j = i + 1; j < spec.r(); ++j) {
      std::vector<RatFunc> ratios;
      for (std::size_t l = 0; l < spec.t; ++l) ratios.push_back(spec.terms[i].alpha[l] / spec.terms[j].alpha[l]);
      KernelBasis kb = relation_lattice(ratios);
      PairReport rep{i, j, kb.trivial(), std::nullopt};
      if (!kb.trivial()) rep.witness = kb.vectors.front();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

bool all_pairs_independent(const MultiRecSpec& spec) {
  for (const auto& p : pairwise_independent(spec))
    if (!p.independent) return false;
  return true;
}

GTrivialReport check_G_trivial(const MultiRecSpec& spec) {
  if (spec.field != FieldTag::Q) throw DomainError("check_G_trivial needs field Q");
  for (std::size_t l = 0; l < spec.r(); ++l) {
    for (std::size_t k = l + 1; k < spec.r(); ++k) {
      std::vector<Rational> ratios;
      for (std::size_t j = 0; j < spec.t; ++j)
        ratios.push_back(spec.terms[l].alpha[j].constant_value() / spec.terms[k].alpha[j].constant_value());
      // Prime-exponent matrix; kernel vectors make the product +-1.
      std::map<Integer, std::vector<long>> rows;
      for (std::size_t j = 0; j < ratios.size(); ++j) {
        for (const auto* part : {&ratios[j].get_num(), &ratios[j].get_den()}) {
          if (abs(*part) == 1) continue;
          long sign = part == &ratios[j].get_num() ? 1 : -1;
          for (const auto& [p, e] : factor_integer(*part)) {
            auto& row = rows.try_emplace(p, std::vector<long>(ratios.size(), 0)).first->second;
            row[j] += sign * static_cast<long>(e);
          }
        }
      }
      IMatrix m;
      for (const auto& [p, row] : rows) m.emplace_back(row.begin(), row.end());
      IMatrix kernel = integer_kernel(m, ratios.size());
      if (kernel.empty()) continue;
      // The sign of the product is (-1)^(sum of z_j over negative ratios).
      auto parity = [&](const IVec& z) {
        Integer s = 0;
        for (std::size_t j = 0; j < ratios.size(); ++j)
          if (ratios[j] < 0) s += z[j];
        return mpz_odd_p(s.get_mpz_t()) != 0;
      };
      IVec witness;
      for (const auto& z : kernel) {
        if (!parity(z)) {
          witness = z;
          break;
        }
      }
      if (witness.empty()) {
        witness = kernel.front();
        for (auto& x : witness) x *= 2;
      }
      if (power_product(ratios, witness) != 1) throw Error("check_G_trivial: witness failed verification");
      return {false, std::make_pair(l, k), witness};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

std::vector<Rational> lemma61_bounds(const RatFunc& alpha0, std::span<const RatFunc> basis) {
  std::vector<long> heights;
  Integer prod = factorial(basis.size() + 1);
  for (const auto& b : basis) {
    heights.push_back(ff_height(b));
    if (heights.back() == 0) throw DomainError("lemma61_bounds: constant basis element");
    prod *= heights.back();
  }
  prod *= ff_height(alpha0);
  std::vector<Rational> out;
  for (long h : heights) {
    Rational v(prod, Integer(h));
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

MultDependence solve_mult_dependence(const RatFunc& alpha0, std::span<const RatFunc> basis) {
  if (alpha0.is_zero()) throw DomainError("solve_mult_dependence: alpha0 is zero");
  if (!relation_lattice(basis).trivial())
    throw DomainError("solve_mult_dependence: basis is not multiplicatively independent modulo constants");
  MultDependence out;
  out.bounds = lemma61_bounds(alpha0, basis);

  std::vector<Divisor> divs;
  PlaceSet places;
  for (const auto& b : basis) {
    divs.push_back(divisor(b));
    for (const auto& [v, e] : divs.back()) places.insert(v);
  }
  // alpha0 must be supported on the basis places: strip them and require a
  // constant remainder.
  RatFunc residual = alpha0;
  QMatrix a;
  std::vector<Rational> rhs;
  for (const auto& v : places.places()) {
    long e = valuation(alpha0, v);
    if (!v.is_infinite() && e != 0) residual /= RatFunc(v.poly()).pow(e);
    std::vector<Rational> row;
    for (const auto& d : divs) {
      auto it = d.find(v);
      row.emplace_back(it == d.end() ? 0L : it->second);
    }
    a.push_back(std::move(row));
    rhs.emplace_back(e);
  }
  if (!residual.is_constant()) return out;
  auto sol = solve_unique(a, rhs);
  if (!sol) return out;
  IVec k;
  for (const auto& x : *sol) {
    if (x.get_den() != 1) return out;
    k.push_back(x.get_num());
  }
  if (power_product(basis, k) != alpha0) return out;
  out.k = std::move(k);
  return out;
}

}  // namespace mrg
