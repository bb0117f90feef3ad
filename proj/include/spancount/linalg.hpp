#pragma once

#include <cstddef>

#include "spancount/matrix.hpp"
#include "spancount/polynomial.hpp"

namespace spancount {

/// Exact determinant. Fraction-free Bareiss elimination when every entry is
/// an integer, rational Gaussian elimination otherwise. det of the 0×0
/// matrix is 1.
big_rat det(const exact_matrix& m);

/// (−1)^{i+j} · det of the minor with row i and column j removed (0-based).
big_rat cofactor(const exact_matrix& m, std::size_t i, std::size_t j);

/// adj(m)[i][j] = cofactor(m, j, i); satisfies m · adj(m) = det(m) · I.
/// adjugate of a 1×1 matrix is [1].
exact_matrix adjugate(const exact_matrix& m);

/// Exact rank via rational elimination; pivots are the first nonzero entry
/// in column order, no magnitude heuristics.
std::size_t rank(const exact_matrix& m);

/// Monic characteristic polynomial det(xI − m) of an integer matrix,
/// computed by Faddeev–LeVerrier; every division is exact and checked.
int_polynomial char_poly(const exact_matrix& m);

}  // namespace spancount
