#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrg/lattice.hpp"
#include "mrg/model.hpp"
#include "mrg/place.hpp"

namespace mrg {

// Lattice of integer relations k with prod f_i^k_i constant.
struct KernelBasis {
  IMatrix vectors;  // Hermite normal form; empty iff the f_i are independent

  bool trivial() const { return vectors.empty(); }
};

// Kernel of the place-exponent matrix of fs (elements of Q(z)); every
// returned vector is re-verified by exact evaluation.
KernelBasis relation_lattice(std::span<const RatFunc> fs);

struct PairReport {
  std::size_t i, j;  // 0-based, i < j
  bool independent;
  std::optional<IVec> witness;  // nonzero relation on the ratios alpha_i/alpha_j
};

// alpha_i, alpha_j independent modulo constants, for every pair (Q(z) only).
std::vector<PairReport> pairwise_independent(const MultiRecSpec& spec);
bool all_pairs_independent(const MultiRecSpec& spec);

struct GTrivialReport {
  bool trivial;
  // First dependent pair (0-based) and a nonzero z with alpha_l^z = alpha_k^z.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<IVec> witness;
};

// Decides G = {0} for a field-"Q" spec: no pair l != k and nonzero z with
// prod_j (alpha_lj / alpha_kj)^z_j = 1 exactly.
GTrivialReport check_G_trivial(const MultiRecSpec& spec);

struct MultDependence {
  std::optional<IVec> k;        // prod basis_i^k_i == alpha0 exactly
  std::vector<Rational> bounds;  // (r+1)! prod_j H(b_j) H(alpha0) / H(b_i)
};

// Lemma-6.1 style solve of alpha0 = prod basis_i^k_i. The basis must be
// multiplicatively independent modulo constants (DomainError otherwise).
MultDependence solve_mult_dependence(const RatFunc& alpha0, std::span<const RatFunc> basis);

// The per-index bound values alone.
std::vector<Rational> lemma61_bounds(const RatFunc& alpha0, std::span<const RatFunc> basis);

// Polynomial in a formal variable x with coefficients in Q(z).
class XPoly {
 public:
  XPoly() = default;
  XPoly(const RatFunc& c);  // NOLINT
  explicit XPoly(std::vector<RatFunc> coeffs);
  static XPoly x() { return XPoly(std::vector<RatFunc>{RatFunc(0), RatFunc(1)}); }

  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RatFunc(0); }
  int degree() const;  // throws on zero

  RatFunc operator()(long x) const;
  XPoly z_derivative() const;  // coefficient-wise d/dz

  XPoly operator-() const;
  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend bool operator==(const XPoly&, const XPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

// Exact quotient; throws Error if b does not divide a.
XPoly exact_div(const XPoly& a, const XPoly& b);
XPoly determinant(std::vector<std::vector<XPoly>> m);

struct DeltaPoly {
  XPoly delta;
  std::size_t q = 0;  // sum of the r_i
  // Columns of the matrix in the order (term i, basis element l).
  std::vector<RatFunc> pis;
  std::vector<std::size_t> term_of;
  std::vector<std::vector<XPoly>> matrix;  // matrix[k][col] = Q_{col,k}(x)
};

// Builds Q_{col,0} = pi, Q_{col,k+1} = dQ/dz + x * Q * alpha'/alpha, whose
// determinant satisfies Delta(n) * prod_i (alpha_i^n)^{r_i} = W(Xi) for the
// z-Wronskian of Xi = {pi_il * alpha_i^n}. Requires t = 1, field Q(z).
DeltaPoly build_delta(const MultiRecSpec& lrs);

// The Wronskian side of the calibration identity, computed from the
// functions pi_il * alpha_i^n directly (derivatives, then determinant).
RatFunc wronskian_at(const MultiRecSpec& lrs, long n);

struct C7Report {
  long c11 = 0, c12 = 0, c7 = 0;
  std::vector<Integer> poly_roots;   // integer n with prod_i P_i(n) = 0
  std::vector<Integer> delta_roots;  // integer n with Delta(n) = 0
};

// C7 = max(C11, C12); each is 1 + the largest integer root (never below 0),
// or 0 without integer roots. Throws DomainError if Delta vanishes
// identically.
C7Report c7_threshold(const MultiRecSpec& lrs);

}  // namespace mrg
