#pragma once

#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// Unimodular transforms and invariant factors with u * a * v = diag(factors).
// u_inv and v_inv are maintained alongside the reduction so callers can move
// between coordinate systems without re-inverting anything.
//
// factors are positive, each divides the next, and entries equal to 1 are
// retained; r is the rank of a.
struct SmithDecomposition {
  IntMatrix u, u_inv;        // rows(a) x rows(a), u * u_inv = I
  IntMatrix v, v_inv;        // cols(a) x cols(a), v * v_inv = I
  std::vector<Int> factors;  // d_1 | d_2 | ... | d_r
  Index r = 0;
};

// Deterministic Smith reduction. Pivots are chosen by minimal absolute
// value, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Rank over the rationals, computed by fraction-free elimination.
Index rank(const IntMatrix& a);

// Fraction-free (Bareiss) determinant; a must be square.
Int determinant(const IntMatrix& a);

// gcd over all maximal (cols(a) x cols(a)) minors; positive. The columns
// must be linearly independent.
Int gcd_of_maximal_minors(const IntMatrix& a);

// Integer coefficients c with basis * c = target when target lies in the
// integer column span of basis, nothing otherwise.
std::optional<IntVector> solve_integer_membership(const IntMatrix& basis,
                                                  const IntVector& target);

}  // namespace toric
