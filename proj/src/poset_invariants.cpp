#include "toric/poset_invariants.hpp"

#include <bit>
#include <cstdint>

namespace toric {

MobiusTable mobius(const HasseDiagram& h) {
  const std::size_t count = h.vertices.size();
  std::size_t bottoms = 0;
  for (const LayerRecord& v : h.vertices)
    if (v.rank == 0) ++bottoms;
  if (bottoms != 1) throw NoBottom("the diagram must have exactly one rank-0 vertex");

  // Ids are sorted by rank and arcs step rank upward, so id order is
  // topological. Down-sets are accumulated as bitsets over ids.
  const std::size_t words = (count + 63) / 64;
  std::vector<std::uint64_t> down(count * words, 0);
  std::vector<std::vector<int>> in_arcs(count);
  for (const auto& [lo, hi] : h.arcs) in_arcs[static_cast<std::size_t>(hi)].push_back(lo);

  MobiusTable table;
  table.values.assign(count, Int(0));
  for (std::size_t v = 0; v < count; ++v) {
    std::uint64_t* dv = &down[v * words];
    for (int u : in_arcs[v]) {
      const std::uint64_t* du = &down[static_cast<std::size_t>(u) * words];
      for (std::size_t w = 0; w < words; ++w) dv[w] |= du[w];
    }
    dv[v / 64] |= std::uint64_t{1} << (v % 64);

    if (h.vertices[v].rank == 0) {
      table.values[v] = 1;
      continue;
    }
    Int sum = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = dv[w];
      while (bits) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (u != v) sum += table.values[u];
      }
    }
    table.values[v] = -sum;
  }
  return table;
}

CharPolynomial characteristic_polynomial(const HasseDiagram& h) {
  const MobiusTable table = mobius(h);
  CharPolynomial chi;
  chi.coeffs.assign(static_cast<std::size_t>(h.d) + 1, Int(0));
  for (const LayerRecord& v : h.vertices)
    chi.coeffs[static_cast<std::size_t>(v.dim)] += table.values[static_cast<std::size_t>(v.id)];
  return chi;
}

std::vector<std::size_t> rank_counts(const HasseDiagram& h) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(h.d) + 1, 0);
  for (const LayerRecord& v : h.vertices) ++counts[static_cast<std::size_t>(v.rank)];
  return counts;
}

}  // namespace toric
