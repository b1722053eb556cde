#pragma once

#include <cstddef>
#include <vector>

#include "toric/arith_matroid.hpp"

namespace toric {

// The finite abelian group attached to a column subset S: W(S)/I(S), where
// A_S = X[S]^t, I(S) = A_S Z^d is the integer image lattice and
// W(S) = A_S R^d cap Z^S is the set of feasible offset tuples.
//
// Everything is phrased in Smith coordinates of A_S (u A_S v = diag(factors)):
// u_top holds the first r rows of u, u_inv_left the first r columns of
// u^{-1}. For k in Z^S with y = u_top * k:
//
//   k lies in W(S)      iff  u_inv_left * y == k
//   class of k          =    (y_i mod factors[i])_i
//   canonical lift of a =    u_inv_left * a
//
// The group order equals the multiplicity of S.
struct LayerGroupData {
  SubsetId subset;
  Index r = 0;               // rank of S
  std::vector<Int> factors;  // invariant factors of A_S; entries of 1 retained
  Int order = 1;             // product of factors
  IntMatrix u_top;           // r x |S|
  IntMatrix u_inv_left;      // |S| x r
  std::vector<int> members;  // columns of S, ascending
};

// One group element: residue tuple plus its canonical lift in Z^S.
struct GroupElement {
  std::vector<Int> residues;  // length r, 0 <= residues[i] < factors[i]
  IntVector lift;             // length |S|
};

LayerGroupData build_layer_group(const MatroidCache& cache, SubsetId s);

// All 2^n groups, indexed by subset bitmask.
std::vector<LayerGroupData> build_layer_group_table(const MatroidCache& cache);

// Group order as a machine word; throws when enumeration would be absurd.
std::size_t group_order(const LayerGroupData& g);

// Elements in lexicographic residue order (first residue most significant).
std::vector<GroupElement> enumerate_elements(const LayerGroupData& g);
GroupElement element_at(const LayerGroupData& g, std::size_t index);
std::size_t element_index(const LayerGroupData& g, const GroupElement& e);
GroupElement zero_element(const LayerGroupData& g);

// Class of an arbitrary k in W(S); throws NotInW otherwise.
GroupElement canonicalize(const LayerGroupData& g, const IntVector& k);

// Same membership test, but returns the enumeration index directly without
// materializing the lift. This is the hot path of the poset builder.
std::size_t canonical_index(const LayerGroupData& g, const IntVector& k);

// Image of h under dropping the single column in S \ T (coordinate
// restriction of lifts). T must be S minus one element.
GroupElement project(const LayerGroupData& g_s, const LayerGroupData& g_t,
                     const GroupElement& h);

// Group law through lifts: class of (a.lift + b.lift).
GroupElement add(const LayerGroupData& g, const GroupElement& a, const GroupElement& b);

}  // namespace toric
