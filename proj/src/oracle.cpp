#include "toric/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

namespace {

// Plain rational row reduction; returns the pivot columns. Everything in
// this file goes through these instead of the integer routines so the two
// paths stay independent.
std::vector<Index> rref_in_place(RatMatrix& a) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rat head = a(r, c);
    a.row(r) /= head;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Index rational_rank(RatMatrix a) { return static_cast<Index>(rref_in_place(a).size()); }

// Columns form a basis of the kernel of a.
RatMatrix rational_kernel_basis(RatMatrix a) {
  const Index n = a.cols();
  const std::vector<Index> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  RatMatrix basis(n, n - static_cast<Index>(pivots.size()));
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector x = RatVector::Zero(n);
    x(f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x(pivots[r]) = -a(static_cast<Index>(r), f);
    basis.col(col++) = x;
  }
  return basis;
}

std::optional<RatVector> rational_solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x = RatVector::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
  return x;
}

// span(inner) subseteq span(container), both given by columns.
bool subspace_contained(const RatMatrix& container, const RatMatrix& inner) {
  RatMatrix joint(container.rows(), container.cols() + inner.cols());
  joint.leftCols(container.cols()) = container;
  joint.rightCols(inner.cols()) = inner;
  return rational_rank(container) == rational_rank(joint);
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Rat(a(i, j));
  return out;
}

RatVector to_rational(const IntVector& a) {
  RatVector out(a.size());
  for (Index i = 0; i < a.size(); ++i) out(i) = Rat(a(i));
  return out;
}

bool forms_integral_on(const IntMatrix& forms, const RatVector& delta) {
  for (Index j = 0; j < forms.cols(); ++j) {
    Rat dot = 0;
    for (Index i = 0; i < forms.rows(); ++i) dot += Rat(forms(i, j)) * delta(i);
    if (!is_integer(dot)) return false;
  }
  return true;
}

void guard_instance(const IntMatrix& x) {
  if (x.cols() > 6 || x.rows() > 3)
    throw InstanceTooLarge("brute-force reconstruction is limited to N <= 6, d <= 3");
  if (rank(x) != x.rows()) throw NotFullRank("the columns must span the ambient space");
}

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

}  // namespace

GeometricLayer make_geometric_layer(const MatroidCache& cache, SubsetId s,
                                    const IntVector& k) {
  GeometricLayer layer;
  layer.subset = s;
  layer.k = k;
  const RatMatrix a_s = to_rational(cache.row_form(s));
  layer.direction = rational_kernel_basis(a_s);
  std::optional<RatVector> anchor = rational_solve(a_s, to_rational(k));
  if (!anchor)
    throw std::logic_error("make_geometric_layer: offsets admit no anchor point");
  layer.anchor = std::move(*anchor);

  // Saturated form lattice span_R(X[S]) cap Z^d: the first rank columns of
  // u^{-1} from the Smith reduction of X[S]. Using the raw columns of X[S]
  // instead would miss points whose forms are integral only on the
  // saturation.
  const SmithDecomposition snf = smith_normal_form(cache.column_submatrix(s));
  layer.lattice_forms = snf.u_inv.leftCols(snf.r);
  return layer;
}

bool layers_equal(const GeometricLayer& a, const GeometricLayer& b) {
  if (a.direction.cols() != b.direction.cols()) return false;
  if (!subspace_contained(a.direction, b.direction)) return false;
  return forms_integral_on(a.lattice_forms, RatVector(b.anchor - a.anchor));
}

bool layer_contains(const GeometricLayer& bigger, const GeometricLayer& smaller) {
  if (smaller.direction.cols() > bigger.direction.cols()) return false;
  if (!subspace_contained(bigger.direction, smaller.direction)) return false;
  return forms_integral_on(bigger.lattice_forms,
                           RatVector(smaller.anchor - bigger.anchor));
}

HasseDiagram brute_force_layer_poset(const IntMatrix& x) {
  guard_instance(x);
  const MatroidCache cache(x);
  const int n = cache.ground_size();
  const std::size_t nsub = std::size_t{1} << n;

  std::vector<GeometricLayer> layers;
  for (std::size_t mask = 0; mask < nsub; ++mask) {
    const SubsetId s(static_cast<std::uint32_t>(mask), n);
    const LayerGroupData g = build_layer_group(cache, s);
    for (const GroupElement& h : enumerate_elements(g))
      layers.push_back(make_geometric_layer(cache, s, h.lift));
  }

  const std::size_t count = layers.size();
  UnionFind uf(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (uf.find(i) != uf.find(j) && layers_equal(layers[i], layers[j]))
        uf.unite(i, j);

  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, fresh] = class_of_root.try_emplace(uf.find(i), members.size());
    if (fresh) members.emplace_back();
    members[it->second].push_back(i);
  }

  struct ClassInfo {
    int rank = 0;
    std::size_t rep = 0;  // member whose subset is the union of all subsets
    std::vector<SubsetId> defining;
  };
  std::vector<ClassInfo> info(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::uint32_t union_bits = 0;
    for (std::size_t idx : members[c]) union_bits |= layers[idx].subset.bits;
    ClassInfo& ci = info[c];
    ci.rank = cache.rank_of_subset(SubsetId(union_bits, n));
    bool found = false;
    for (std::size_t idx : members[c]) {
      ci.defining.push_back(layers[idx].subset);
      if (layers[idx].subset.bits == union_bits) {
        ci.rep = idx;
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("brute_force_layer_poset: no maximal defining subset");
    std::sort(ci.defining.begin(), ci.defining.end());
  }

  std::vector<std::size_t> order(members.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (info[a].rank != info[b].rank) return info[a].rank < info[b].rank;
    if (layers[info[a].rep].subset.bits != layers[info[b].rep].subset.bits)
      return layers[info[a].rep].subset.bits < layers[info[b].rep].subset.bits;
    return compare_lex(layers[info[a].rep].k, layers[info[b].rep].k) < 0;
  });

  HasseDiagram out;
  out.d = cache.ambient_dim();
  out.n = n;
  out.kind = ArrangementKind::toric;
  out.vertices.resize(members.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const ClassInfo& ci = info[order[pos]];
    LayerRecord& rec = out.vertices[pos];
    rec.id = static_cast<int>(pos);
    rec.rank = ci.rank;
    rec.dim = out.d - ci.rank;
    rec.defining_subsets = ci.defining;
    rec.canonical_name.subset = layers[ci.rep].subset;
    rec.canonical_name.k = layers[ci.rep].k;
  }

  // The poset is graded, so covers are exactly the containments that step
  // rank by one.
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) {
      const ClassInfo& lo = info[order[a]];
      const ClassInfo& hi = info[order[b]];
      if (hi.rank != lo.rank + 1) continue;
      if (layer_contains(layers[lo.rep], layers[hi.rep]))
        out.arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

std::vector<RatVector> enumerate_torsion_points(const IntMatrix& x) {
  const Index d = x.rows();
  const int n = static_cast<int>(x.cols());
  if (rank(x) != d) throw NotFullRank("the columns must span the ambient space");

  // Every 0-dimensional layer lies on an intersection indexed by some column
  // basis B, so sweeping the bases and collecting the finite solution sets
  // of X[B]^t alpha in Z^B modulo Z^d is exhaustive.
  const MatroidCache cache(x);
  auto vector_less = [](const RatVector& a, const RatVector& b) {
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
      const int c = cmp(a(i), b(i));
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  };
  std::set<RatVector, decltype(vector_less)> points(vector_less);

  std::vector<int> pick(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = static_cast<int>(i);
  do {
    std::uint32_t bits = 0;
    for (int p : pick) bits |= std::uint32_t{1} << p;
    const SubsetId b(bits, n);
    if (cache.rank_of_subset(b) != static_cast<int>(d)) continue;
    const SmithDecomposition snf = smith_normal_form(cache.row_form(b));
    std::vector<std::size_t> radix(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i)
      radix[static_cast<std::size_t>(i)] = checked_size(snf.factors[static_cast<std::size_t>(i)]);
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      RatVector alpha = RatVector::Zero(d);
      for (Index col = 0; col < d; ++col) {
        Rat coeff(static_cast<unsigned long>(idx[static_cast<std::size_t>(col)]),
                  static_cast<unsigned long>(radix[static_cast<std::size_t>(col)]));
        coeff.canonicalize();
        for (Index row = 0; row < d; ++row) alpha(row) += Rat(snf.v(row, col)) * coeff;
      }
      for (Index row = 0; row < d; ++row) alpha(row) = frac_rat(alpha(row));
      points.insert(alpha);

      Index bump = d - 1;
      while (bump >= 0 && ++idx[static_cast<std::size_t>(bump)] ==
                              radix[static_cast<std::size_t>(bump)]) {
        idx[static_cast<std::size_t>(bump)] = 0;
        --bump;
      }
      if (bump < 0) break;
    }
  } while (next_combination(pick, n));

  return std::vector<RatVector>(points.begin(), points.end());
}

HasseDiagram brute_force_flat_lattice(const IntMatrix& x) {
  guard_instance(x);
  const MatroidCache cache(x);
  const int n = cache.ground_size();
  const std::size_t nsub = std::size_t{1} << n;

  // cl(S) adjoins every column that does not raise the rank; flats are the
  // distinct closures.
  std::map<std::uint32_t, std::vector<SubsetId>> flats;
  for (std::size_t mask = 0; mask < nsub; ++mask) {
    const SubsetId s(static_cast<std::uint32_t>(mask), n);
    const int rho = cache.rank_of_subset(s);
    std::uint32_t closure = s.bits;
    for (int i = 0; i < n; ++i)
      if (!s.contains(i) && cache.rank_of_subset(s.with(i)) == rho)
        closure |= std::uint32_t{1} << i;
    flats[closure].push_back(s);
  }

  struct Flat {
    SubsetId subset;
    int rank;
  };
  std::vector<Flat> list;
  for (const auto& entry : flats) {
    const SubsetId f(entry.first, n);
    list.push_back(Flat{f, cache.rank_of_subset(f)});
  }
  std::sort(list.begin(), list.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.subset.bits < b.subset.bits;
  });

  HasseDiagram out;
  out.d = cache.ambient_dim();
  out.n = n;
  out.kind = ArrangementKind::hyperplane;
  out.vertices.resize(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    LayerRecord& rec = out.vertices[i];
    rec.id = static_cast<int>(i);
    rec.rank = list[i].rank;
    rec.dim = out.d - list[i].rank;
    rec.defining_subsets = flats[list[i].subset.bits];
    std::sort(rec.defining_subsets.begin(), rec.defining_subsets.end());
    rec.canonical_name.subset = list[i].subset;
    rec.canonical_name.k = IntVector::Zero(list[i].subset.size());
  }
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < list.size(); ++b)
      if (list[b].rank == list[a].rank + 1 && list[a].subset.subset_of(list[b].subset))
        out.arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

}  // namespace toric
