#include "toric/poset_builder.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace toric {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

GroupElement trivial_element() {
  GroupElement e;
  e.lift = IntVector(0);
  return e;
}

}  // namespace

HasseDiagram contract_equivalence(const MatroidCache& cache, ArrangementKind kind,
                                  const std::vector<PreVertex>& pre_vertices,
                                  const ArcList& blue_arcs, const ArcList& black_arcs) {
  const std::size_t count = pre_vertices.size();
  UnionFind uf(count);
  for (const auto& [a, b] : blue_arcs) {
    if (cache.rank_of_subset(pre_vertices[a].subset) !=
        cache.rank_of_subset(pre_vertices[b].subset))
      throw std::logic_error("contract_equivalence: merge arc joins different ranks");
    uf.unite(a, b);
  }

  // Gather classes in first-appearance order; the final order comes later.
  std::unordered_map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> class_of(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t root = uf.find(i);
    auto [it, fresh] = class_of_root.try_emplace(root, members.size());
    if (fresh) members.emplace_back();
    class_of[i] = it->second;
    members[it->second].push_back(i);
  }

  struct ClassInfo {
    int rank = 0;
    SubsetId max_subset;
    const IntVector* lift = nullptr;  // canonical offsets at max_subset (toric)
    std::vector<SubsetId> defining;
  };
  std::vector<ClassInfo> info(members.size());

  for (std::size_t c = 0; c < members.size(); ++c) {
    ClassInfo& ci = info[c];
    std::uint32_t union_bits = 0;
    std::unordered_set<std::uint32_t> seen;
    const std::size_t first = members[c].front();
    ci.rank = cache.rank_of_subset(pre_vertices[first].subset);
    for (std::size_t idx : members[c]) {
      const SubsetId s = pre_vertices[idx].subset;
      if (!seen.insert(s.bits).second)
        throw std::logic_error("contract_equivalence: two elements of one subset merged");
      if (cache.rank_of_subset(s) != ci.rank)
        throw std::logic_error("contract_equivalence: class mixes ranks");
      union_bits |= s.bits;
      ci.defining.push_back(s);
    }
    const IntVector* max_lift = nullptr;
    for (std::size_t idx : members[c])
      if (pre_vertices[idx].subset.bits == union_bits) {
        ci.max_subset = pre_vertices[idx].subset;
        max_lift = &pre_vertices[idx].element.lift;
        break;
      }
    if (max_lift == nullptr)
      throw std::logic_error(
          "contract_equivalence: class has no inclusion-maximal defining subset");
    ci.lift = max_lift;
    std::sort(ci.defining.begin(), ci.defining.end());
  }

  // Deterministic vertex order: rank, then maximal subset, then offsets.
  std::vector<std::size_t> order(members.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (info[a].rank != info[b].rank) return info[a].rank < info[b].rank;
    if (info[a].max_subset.bits != info[b].max_subset.bits)
      return info[a].max_subset.bits < info[b].max_subset.bits;
    return compare_lex(*info[a].lift, *info[b].lift) < 0;
  });
  std::vector<int> id_of_class(members.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    id_of_class[order[pos]] = static_cast<int>(pos);

  HasseDiagram out;
  out.d = cache.ambient_dim();
  out.n = cache.ground_size();
  out.kind = kind;
  out.vertices.resize(members.size());
  int bottoms = 0;
  for (std::size_t c = 0; c < members.size(); ++c) {
    LayerRecord& rec = out.vertices[static_cast<std::size_t>(id_of_class[c])];
    rec.id = id_of_class[c];
    rec.rank = info[c].rank;
    rec.dim = out.d - info[c].rank;
    rec.defining_subsets = std::move(info[c].defining);
    rec.canonical_name.subset = info[c].max_subset;
    rec.canonical_name.k = kind == ArrangementKind::toric
                               ? *info[c].lift
                               : IntVector::Zero(info[c].max_subset.size());
    if (rec.rank == 0) ++bottoms;
  }
  if (bottoms != 1)
    throw std::logic_error("contract_equivalence: expected exactly one rank-0 vertex");

  std::unordered_set<std::uint64_t> seen_arcs;
  out.arcs.reserve(black_arcs.size());
  for (const auto& [a, b] : black_arcs) {
    const int la = id_of_class[class_of[a]];
    const int lb = id_of_class[class_of[b]];
    if (out.vertices[static_cast<std::size_t>(lb)].rank !=
        out.vertices[static_cast<std::size_t>(la)].rank + 1)
      throw std::logic_error("contract_equivalence: cover arc does not step rank by one");
    const std::uint64_t key =
        (static_cast<std::uint64_t>(la) << 32) | static_cast<std::uint32_t>(lb);
    if (seen_arcs.insert(key).second) out.arcs.emplace_back(la, lb);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

namespace {

HasseDiagram build_poset(const IntMatrix& x, ArrangementKind kind, int max_ground_set) {
  const Index d = x.rows();
  const Index n = x.cols();
  if (n > max_ground_set)
    throw GroundSetTooLarge("N=" + std::to_string(n) + " columns exceed the cap " +
                            std::to_string(max_ground_set));
  if (rank(x) != d)
    throw NotFullRank("the columns must span the ambient space");

  const MatroidCache cache(x);
  const int nn = static_cast<int>(n);
  const std::size_t nsub = std::size_t{1} << nn;

  std::vector<LayerGroupData> table;
  if (kind == ArrangementKind::toric) table = build_layer_group_table(cache);

  std::vector<std::size_t> offset(nsub + 1, 0);
  for (std::size_t mask = 0; mask < nsub; ++mask)
    offset[mask + 1] =
        offset[mask] + (kind == ArrangementKind::toric ? group_order(table[mask]) : 1);

  std::vector<PreVertex> pre;
  pre.reserve(offset[nsub]);
  for (std::size_t mask = 0; mask < nsub; ++mask) {
    const SubsetId s(static_cast<std::uint32_t>(mask), nn);
    if (kind == ArrangementKind::toric)
      for (GroupElement& e : enumerate_elements(table[mask]))
        pre.push_back(PreVertex{s, std::move(e)});
    else
      pre.push_back(PreVertex{s, trivial_element()});
  }

  ArcList blue, black;
  for (std::size_t mask = 1; mask < nsub; ++mask) {
    const SubsetId s(static_cast<std::uint32_t>(mask), nn);
    const int rank_s = cache.rank_of_subset(s);
    const std::size_t base_s = offset[mask];
    const std::size_t count_s = offset[mask + 1] - offset[mask];
    const auto mem = s.members();
    for (std::size_t pos = 0; pos < mem.size(); ++pos) {
      const SubsetId t = s.without(mem[pos]);
      const bool same_rank = cache.rank_of_subset(t) == rank_s;
      ArcList& side = same_rank ? blue : black;
      for (std::size_t h = 0; h < count_s; ++h) {
        std::size_t target = offset[t.bits];
        if (kind == ArrangementKind::toric) {
          const IntVector& lift = pre[base_s + h].element.lift;
          IntVector kt(lift.size() - 1);
          Index o = 0;
          for (Index i = 0; i < lift.size(); ++i)
            if (i != static_cast<Index>(pos)) kt(o++) = lift(i);
          target += canonical_index(table[t.bits], kt);
        }
        side.emplace_back(target, base_s + h);
      }
    }
  }

  return contract_equivalence(cache, kind, pre, blue, black);
}

}  // namespace

HasseDiagram build_layer_poset(const IntMatrix& x, int max_ground_set) {
  return build_poset(x, ArrangementKind::toric, max_ground_set);
}

HasseDiagram build_intersection_lattice(const IntMatrix& x, int max_ground_set) {
  return build_poset(x, ArrangementKind::hyperplane, max_ground_set);
}

bool isomorphic_diagrams(const HasseDiagram& a, const HasseDiagram& b) {
  if (a.d != b.d || a.n != b.n) return false;
  if (a.vertices.size() != b.vertices.size() || a.arcs != b.arcs) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const LayerRecord& va = a.vertices[i];
    const LayerRecord& vb = b.vertices[i];
    if (va.rank != vb.rank || va.dim != vb.dim) return false;
    if (!(va.canonical_name.subset == vb.canonical_name.subset)) return false;
    if (compare_lex(va.canonical_name.k, vb.canonical_name.k) != 0) return false;
    if (va.defining_subsets != vb.defining_subsets) return false;
  }
  return true;
}

}  // namespace toric
