#pragma once

#include <vector>

#include "mrg/rational.hpp"

namespace mrg {

using IVec = std::vector<Integer>;
using IMatrix = std::vector<IVec>;  // row-major

// Row Hermite normal form of the lattice spanned by the rows: positive
// pivots, entries above each pivot reduced into [0, pivot), zero rows
// dropped. Canonical for the lattice.
IMatrix hermite_normal_form(IMatrix rows);

// Basis (in Hermite normal form) of { k in Z^ncols : m * k = 0 }.
IMatrix integer_kernel(const IMatrix& m, std::size_t ncols);

}  // namespace mrg
