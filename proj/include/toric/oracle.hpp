#pragma once

#include <vector>

#include "toric/poset_builder.hpp"

namespace toric {

// A layer held by its geometry instead of by group bookkeeping: the
// direction space of the underlying affine subspace, one rational anchor
// point on it, and an integer basis of the saturated lattice
// span_R(X[S]) cap Z^d. Two torus images coincide exactly when their
// direction spaces agree and every such integer form takes an integer value
// on the difference of anchors.
struct GeometricLayer {
  SubsetId subset;
  IntVector k;             // feasible offsets used to build the layer
  RatMatrix direction;     // d x (d - rank), kernel basis of X[S]^t
  RatVector anchor;        // one solution of X[S]^t a = k
  IntMatrix lattice_forms; // d x rank, basis of the saturated form lattice
};

GeometricLayer make_geometric_layer(const MatroidCache& cache, SubsetId s,
                                    const IntVector& k);

bool layers_equal(const GeometricLayer& a, const GeometricLayer& b);

// True when `smaller` is a subset of `bigger` (as subsets of the torus);
// reflexive.
bool layer_contains(const GeometricLayer& bigger, const GeometricLayer& smaller);

// Reconstruct the poset of layers from pairwise geometric comparisons,
// normalized exactly like the sweep output so results compare directly.
// Refuses instances beyond N <= 6, d <= 3.
HasseDiagram brute_force_layer_poset(const IntMatrix& x);

// Every 0-dimensional layer of the arrangement, as points of [0,1)^d in
// ascending lexicographic order.
std::vector<RatVector> enumerate_torsion_points(const IntMatrix& x);

// Lattice of flats by closure enumeration, independent of the sweep; the
// hyperplane-side counterpart of brute_force_layer_poset, same size guard.
HasseDiagram brute_force_flat_lattice(const IntMatrix& x);

}  // namespace toric
