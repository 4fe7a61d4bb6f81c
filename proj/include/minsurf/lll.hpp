#pragma once

#include <vector>

#include "minsurf/mat.hpp"

namespace minsurf {

// In-place LLL reduction (delta = 3/4) of the rows of `basis`, exact
// arithmetic throughout.
void lll_reduce(std::vector<std::vector<bigint_t>>& basis);

// Integer relations c with ||P c||_inf <= tol and |c|_inf <= max_height,
// found by LLL on the columns of P embedded with scale 10^scale_digits.
// Every returned vector is re-verified against P in working precision and
// the set is independent (exact rank equals its size).
std::vector<std::vector<bigint_t>> find_column_relations(const RealMat& P, const real_t& tol,
                                                         const bigint_t& max_height,
                                                         int scale_digits = 24);

// Exact rank of an integer matrix (fraction-free elimination).
int rank_exact(const IntMat& m);

}  // namespace minsurf
