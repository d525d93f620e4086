#pragma once

#include <optional>
#include <vector>

#include "mrg/rational.hpp"

namespace mrg {

using QMatrix = std::vector<std::vector<Rational>>;  // row-major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Unique solution x of A x = b when A has full column rank; nullopt if the
// system is inconsistent. Throws DomainError if A is column-rank deficient.
std::optional<std::vector<Rational>> solve_unique(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace mrg
