#include "toric/layer_groups.hpp"

#include <stdexcept>
#include <string>

namespace toric {

namespace {

std::string subset_text(SubsetId s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

IntVector residues_as_vector(const std::vector<Int>& residues) {
  IntVector a(static_cast<Index>(residues.size()));
  for (std::size_t i = 0; i < residues.size(); ++i) a(static_cast<Index>(i)) = residues[i];
  return a;
}

}  // namespace

LayerGroupData build_layer_group(const MatroidCache& cache, SubsetId s) {
  const SmithDecomposition snf = smith_normal_form(cache.row_form(s));
  LayerGroupData g;
  g.subset = s;
  g.r = snf.r;
  g.factors = snf.factors;
  g.order = 1;
  for (const Int& f : g.factors) g.order *= f;
  g.u_top = snf.u.topRows(snf.r);
  g.u_inv_left = snf.u_inv.leftCols(snf.r);
  g.members = s.members();
  if (static_cast<int>(g.r) != cache.rank_of_subset(s))
    throw std::logic_error("build_layer_group: Smith rank disagrees with subset rank");
  return g;
}

std::vector<LayerGroupData> build_layer_group_table(const MatroidCache& cache) {
  const int n = cache.ground_size();
  const std::size_t slots = std::size_t{1} << n;
  std::vector<LayerGroupData> table;
  table.reserve(slots);
  for (std::size_t mask = 0; mask < slots; ++mask)
    table.push_back(build_layer_group(cache, SubsetId(static_cast<std::uint32_t>(mask), n)));
  return table;
}

std::size_t group_order(const LayerGroupData& g) { return checked_size(g.order); }

GroupElement element_at(const LayerGroupData& g, std::size_t index) {
  GroupElement e;
  e.residues.assign(static_cast<std::size_t>(g.r), Int(0));
  std::size_t rem = index;
  for (Index i = g.r - 1; i >= 0; --i) {
    const std::size_t d = checked_size(g.factors[static_cast<std::size_t>(i)]);
    e.residues[static_cast<std::size_t>(i)] = static_cast<unsigned long>(rem % d);
    rem /= d;
  }
  if (rem != 0) throw std::out_of_range("element_at: index exceeds group order");
  e.lift = g.u_inv_left * residues_as_vector(e.residues);
  return e;
}

std::vector<GroupElement> enumerate_elements(const LayerGroupData& g) {
  const std::size_t count = group_order(g);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(element_at(g, i));
  return out;
}

std::size_t element_index(const LayerGroupData& g, const GroupElement& e) {
  std::size_t idx = 0;
  for (Index i = 0; i < g.r; ++i) {
    const std::size_t d = checked_size(g.factors[static_cast<std::size_t>(i)]);
    idx = idx * d + checked_size(e.residues[static_cast<std::size_t>(i)]);
  }
  return idx;
}

GroupElement zero_element(const LayerGroupData& g) {
  GroupElement e;
  e.residues.assign(static_cast<std::size_t>(g.r), Int(0));
  e.lift = IntVector::Zero(static_cast<Index>(g.members.size()));
  return e;
}

GroupElement canonicalize(const LayerGroupData& g, const IntVector& k) {
  if (k.size() != static_cast<Index>(g.members.size()))
    throw std::invalid_argument("canonicalize: offset tuple has the wrong length");
  const IntVector y = g.u_top * k;
  const IntVector back = g.u_inv_left * y;
  for (Index i = 0; i < k.size(); ++i)
    if (back(i) != k(i))
      throw NotInW("offset tuple is not feasible for subset " + subset_text(g.subset));
  GroupElement e;
  e.residues.resize(static_cast<std::size_t>(g.r));
  for (Index i = 0; i < g.r; ++i)
    e.residues[static_cast<std::size_t>(i)] =
        mod_floor(y(i), g.factors[static_cast<std::size_t>(i)]);
  e.lift = g.u_inv_left * residues_as_vector(e.residues);
  return e;
}

std::size_t canonical_index(const LayerGroupData& g, const IntVector& k) {
  if (k.size() != static_cast<Index>(g.members.size()))
    throw std::invalid_argument("canonical_index: offset tuple has the wrong length");
  const IntVector y = g.u_top * k;
  const IntVector back = g.u_inv_left * y;
  for (Index i = 0; i < k.size(); ++i)
    if (back(i) != k(i))
      throw NotInW("offset tuple is not feasible for subset " + subset_text(g.subset));
  std::size_t idx = 0;
  for (Index i = 0; i < g.r; ++i) {
    const std::size_t d = checked_size(g.factors[static_cast<std::size_t>(i)]);
    idx = idx * d + checked_size(mod_floor(y(i), g.factors[static_cast<std::size_t>(i)]));
  }
  return idx;
}

GroupElement project(const LayerGroupData& g_s, const LayerGroupData& g_t,
                     const GroupElement& h) {
  const SubsetId s = g_s.subset;
  const SubsetId t = g_t.subset;
  if (t.n != s.n || !t.subset_of(s) || s.size() != t.size() + 1)
    throw NotCodimOne("expected " + subset_text(t) + " to be " + subset_text(s) +
                      " minus a single element");
  const int dropped = SubsetId(s.bits ^ t.bits, s.n).members().front();
  const Index pos = s.position_of(dropped);

  IntVector kt(static_cast<Index>(g_t.members.size()));
  Index o = 0;
  for (Index i = 0; i < h.lift.size(); ++i)
    if (i != pos) kt(o++) = h.lift(i);

  try {
    return canonicalize(g_t, kt);
  } catch (const NotInW&) {
    throw std::logic_error("project: restricted offset tuple left the feasible set");
  }
}

GroupElement add(const LayerGroupData& g, const GroupElement& a, const GroupElement& b) {
  return canonicalize(g, a.lift + b.lift);
}

}  // namespace toric
