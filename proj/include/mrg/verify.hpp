#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mrg/bounds.hpp"
#include "mrg/lattice.hpp"
#include "mrg/model.hpp"
#include "mrg/place.hpp"

namespace mrg {

using IntPoint = std::vector<long>;

// { n in Z^t : |n_j| <= N } or [0, N]^t, iterated lexicographically.
struct Box {
  long N = 0;
  bool nonneg = false;

  long lo() const { return nonneg ? 0 : -N; }
  long hi() const { return N; }
  // Number of points for dimension t.
  std::size_t count(std::size_t t) const;
};

// max_j |n_j|
long sup_norm(const IntPoint& n);

struct NFPoint {
  IntPoint n;
  Rational G;
  Rational lead;  // P_{i0}(n) alpha_{i0}^n
  // Filled by classify_nf.
  std::vector<std::size_t> in_S;                          // 0-based i with P_i(n) = 0
  std::vector<std::vector<std::size_t>> vanishing;         // every I containing i0 with zero subsum
  std::vector<std::vector<std::size_t>> minimal_vanishing;  // the inclusion-minimal ones
  std::optional<bool> in_A;
};

struct FFPoint {
  IntPoint n;
  std::string G;
  long mu_G = 0;
  std::vector<long> term_exponents;  // sum_j n_j mu(alpha_ij), per i
  long min_term = 0;
  long rhs = 0;  // C6 + min_term
};

struct VerifyReport {
  std::string kind;  // "nf-enumeration" or "ff-growth"
  nlohmann::json params = nlohmann::json::object();
  std::optional<Mode> mode;
  // number fields
  std::vector<NFPoint> solutions;
  std::vector<IntPoint> s1_points;  // P_{i0}(n) = 0; never solutions
  bool classified = false;
  std::optional<std::size_t> a_count;
  std::optional<BoundReport> a_bound;
  // function fields
  std::optional<Integer> C5, C6;
  std::vector<FFPoint> violations;           // |n| >= C5
  std::vector<FFPoint> below_threshold;      // |n| < C5, informational
  std::vector<IntPoint> g_zero_points;       // skipped: G(n) = 0
  std::map<std::string, std::size_t> counts;
  bool pass = true;
};

// Exact solution set of |G(n)| < |P_{i0}(n) alpha_{i0}^n| * alpha_max^{-|n| t eps}.
VerifyReport enumerate_nf_solutions(const MultiRecSpec& spec, const Rational& eps, const Box& box,
                                    std::size_t i0 = 0, unsigned workers = 1);

// Tags S_i membership, vanishing subsums containing i0 and membership in A;
// compares the number of A-members with the cor23 bound.
VerifyReport classify_nf(VerifyReport report, const MultiRecSpec& spec);

// mu(G(n)) <= C6 + min_i sum_j n_j mu(alpha_ij) on the box.
VerifyReport verify_ff_growth(const MultiRecSpec& spec, const Place& mu, const Box& box, Mode mode,
                              unsigned workers = 1);

struct BMReport {
  long lhs = 0, rhs = 0;
  PlaceSet S;
  bool pass = false;
};
BMReport check_bm(std::span<const RatFunc> us, unsigned genus = 0);

struct ZannierReport {
  long lhs = 0, rhs = 0;
  PlaceSet S;
  RatFunc delta;
  std::vector<std::pair<Place, long>> per_place;  // deg(v) (mu_v(delta) - min_i mu_v(rho_i))
  bool pass = false;
};
ZannierReport check_zannier(std::span<const RatFunc> rhos, std::size_t r_idx, const PlaceSet& extra_places,
                            Mode mode, unsigned genus = 0);

struct Lemma61Report {
  RatFunc alpha0;
  std::vector<Rational> bounds;
  bool pass = false;
};
Lemma61Report check_lemma61(std::span<const RatFunc> basis, const IVec& k);

}  // namespace mrg
