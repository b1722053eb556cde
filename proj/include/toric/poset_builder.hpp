#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/layer_groups.hpp"

namespace toric {

enum class ArrangementKind { hyperplane, toric };

inline constexpr int kDefaultMaxGroundSet = 20;

// Canonical name of a vertex: its inclusion-maximal defining subset together
// with the canonical lift of the group element living there (the zero tuple
// in the hyperplane case).
struct LayerName {
  SubsetId subset;
  IntVector k;
};

struct LayerRecord {
  int id = 0;
  int rank = 0;
  int dim = 0;
  std::vector<SubsetId> defining_subsets;  // ascending bitmask order
  LayerName canonical_name;
};

// Graded DAG of cover relations. Vertices are sorted by
// (rank, name subset, name offsets), arcs by (lower, upper); both orders are
// reproducible for a fixed input matrix.
struct HasseDiagram {
  int d = 0;
  int n = 0;
  ArrangementKind kind = ArrangementKind::toric;
  std::vector<LayerRecord> vertices;
  std::vector<std::pair<int, int>> arcs;  // rank(upper) == rank(lower) + 1
};

// Raw vertex of the sweep: a subset together with one element of its group.
// Hyperplane sweeps carry the trivial element (empty residues, empty lift).
struct PreVertex {
  SubsetId subset;
  GroupElement element;
};

using ArcList = std::vector<std::pair<std::size_t, std::size_t>>;

// Glue the sweep output into a diagram: blue arcs are contracted into
// equivalence classes, black arcs become the cover relations. Verifies the
// structural invariants (blue arcs join equal ranks, each class has a unique
// inclusion-maximal defining subset, covers step rank by exactly one, a
// single rank-0 vertex exists) and deduplicates the covers.
HasseDiagram contract_equivalence(const MatroidCache& cache, ArrangementKind kind,
                                  const std::vector<PreVertex>& pre_vertices,
                                  const ArcList& blue_arcs, const ArcList& black_arcs);

// Poset of layers of the central toric arrangement defined by the columns
// of x (full rank required).
HasseDiagram build_layer_poset(const IntMatrix& x,
                               int max_ground_set = kDefaultMaxGroundSet);

// Intersection lattice of the central hyperplane arrangement: same sweep
// with every group trivial.
HasseDiagram build_intersection_lattice(const IntMatrix& x,
                                        int max_ground_set = kDefaultMaxGroundSet);

// Exact comparison as graded digraphs with canonical names; the arrangement
// kind tag itself is not compared.
bool isomorphic_diagrams(const HasseDiagram& a, const HasseDiagram& b);

}  // namespace toric
