#pragma once

#include <cstddef>
#include <vector>

#include "toric/poset_builder.hpp"

namespace toric {

// Moebius values mu(bottom, v), indexed by vertex id.
struct MobiusTable {
  std::vector<Int> values;
};

// Coefficients by ascending power of t; degree equals the ambient dimension.
struct CharPolynomial {
  std::vector<Int> coeffs;
};

// Recursive Moebius computation over the down-sets of the diagram. Requires
// exactly one rank-0 vertex.
MobiusTable mobius(const HasseDiagram& h);

// sum over vertices of mu(bottom, v) * t^dim(v).
CharPolynomial characteristic_polynomial(const HasseDiagram& h);

// Vertex counts by rank, length d + 1.
std::vector<std::size_t> rank_counts(const HasseDiagram& h);

}  // namespace toric
