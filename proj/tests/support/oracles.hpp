#pragma once

// Reference implementations used only to cross-check the library. They are
// deliberately naive (exhaustive search, minors, textbook elimination) and
// share no code with the lattice module.

#include <optional>
#include <vector>

#include "qcalc/int_matrix.hpp"

namespace qcalc::oracle {

/// Determinant by cofactor expansion.
Integer cofactor_determinant(const IntMatrix& m);

/// Invariant factors d_k = D_k / D_{k-1}, where D_k is the gcd of all k x k
/// minors. Zero factors are omitted.
std::vector<Integer> determinantal_invariant_factors(const IntMatrix& m);

/// Smith diagonal by plain elementary row and column operations: move the
/// smallest nonzero entry to the corner, reduce its row and column by
/// division with remainder, repeat; then repair divisibility with gcd/lcm
/// on diagonal pairs. Returns the nonzero diagonal, sorted by divisibility.
std::vector<Integer> elementary_invariant_factors(IntMatrix m);

/// Integer coefficients c with |c_i| <= bound and c * generators == target.
std::optional<IntVector> search_combination(const IntMatrix& generators, const IntVector& target,
                                            long bound);

/// Every nonzero x with |x_i| <= bound and x * m == 0.
std::vector<IntVector> search_left_kernel(const IntMatrix& m, long bound);

/// Row-style HNF shape: pivots strictly move right, positive, entries above
/// a pivot in [0, pivot), no zero rows.
bool has_hnf_shape(const IntMatrix& h);

}  // namespace qcalc::oracle
