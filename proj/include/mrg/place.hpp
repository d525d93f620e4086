#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mrg/ratfunc.hpp"

namespace mrg {

// A place of Q(z): a monic irreducible polynomial over Q, or infinity.
// A finite place of degree m stands for the m conjugate points of C(z).
class Place {
 public:
  static Place infinite() { return Place(); }
  // Throws DomainError unless p is monic and irreducible over Q.
  static Place finite(const Poly& p);
  // No irreducibility check; for callers that obtained p from factor_poly.
  static Place finite_unchecked(const Poly& p) { return Place(p); }

  bool is_infinite() const { return !poly_.has_value(); }
  const Poly& poly() const { return *poly_; }
  int degree() const { return poly_ ? poly_->degree() : 1; }

  // Polynomial rendering, or "inf".
  std::string to_string() const;

  // Finite places in canonical_order, then the infinite place.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) { return (a <=> b) == 0; }

 private:
  Place() = default;
  explicit Place(Poly p) : poly_(std::move(p)) {}
  std::optional<Poly> poly_;
};

// Finitely supported map place -> nonzero exponent.
using Divisor = std::map<Place, long>;

class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::set<Place> places) : places_(std::move(places)) {}

  void insert(const Place& v) { places_.insert(v); }
  void merge(const PlaceSet& other) { places_.insert(other.places_.begin(), other.places_.end()); }
  bool contains(const Place& v) const { return places_.contains(v); }
  const std::set<Place>& places() const { return places_; }
  std::size_t size() const { return places_.size(); }
  // Sum of place degrees; the number of C(z)-places represented.
  long weighted_size() const;

 private:
  std::set<Place> places_;
};

// mu_v(f) for f != 0.
long valuation(const RatFunc& f, const Place& v);
// Every place with nonzero valuation; empty for constants.
Divisor divisor(const RatFunc& f);
// Sum over the divisor of deg(v) * exponent; zero for every principal divisor.
long degree(const Divisor& d);

// Projective height -sum_v deg(v) min_i mu_v(f_i). Zero entries never
// attain the minimum; at least one entry must be nonzero.
long ff_height(std::span<const RatFunc> fs);
// H(f) := H((1, f)) = max(deg num, deg den).
long ff_height(const RatFunc& f);

RatFunc derivative(const RatFunc& f);

// Finite places in the supports of divisor(f), plus infinity when requested
// (whether or not some f has a zero or pole there).
PlaceSet support(std::span<const RatFunc> fs, bool include_infinite);

// Dimension of the Q-span of fs (equivalently the C-span: rank of a rational
// matrix does not change under field extension).
std::size_t constant_rank(std::span<const RatFunc> fs);

}  // namespace mrg
