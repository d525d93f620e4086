#include "mrg/lattice.hpp"

#include "mrg/errors.hpp"

namespace mrg {

namespace {

bool is_zero(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Row echelon form by unimodular row operations, restricted to the first
// `width` columns. Returns the number of nonzero rows (moved to the top).
std::size_t echelon(IMatrix& a, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < a.size(); ++c) {
    // Euclid on column c over rows r.., accumulating the gcd in row r.
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (piv == a.size() || abs(a[i][c]) < abs(a[piv][c])) piv = i;
      }
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < a.size() && a[r][c] != 0) ++r;
  }
  return r;
}

}  // namespace

IMatrix hermite_normal_form(IMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows[0].size();
  std::size_t rank = echelon(rows, width);
  rows.resize(rank);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t c = 0;
    while (rows[r][c] == 0) ++c;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < width; ++j) rows[i][j] -= q * rows[r][j];
    }
  }
  return rows;
}

IMatrix integer_kernel(const IMatrix& m, std::size_t ncols) {
  for (const auto& row : m)
    if (row.size() != ncols) throw DomainError("integer_kernel: ragged matrix");
  const std::size_t nrows = m.size();
  // Rows of [m^T | I]; reducing the left block leaves kernel vectors on the right.
  IMatrix a(ncols, IVec(nrows + ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) a[j][i] = m[i][j];
    a[j][nrows + j] = 1;
  }
  std::size_t rank = echelon(a, nrows);
  IMatrix kernel;
  for (std::size_t j = rank; j < ncols; ++j) {
    IVec v(a[j].begin() + static_cast<long>(nrows), a[j].end());
    if (!is_zero(v)) kernel.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(kernel));
}

}  // namespace mrg
