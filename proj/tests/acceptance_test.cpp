// Acceptance gate for the layer-poset library. Each criterion prints one
// PASS/FAIL line; the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "toric/arith_matroid.hpp"
#include "toric/layer_groups.hpp"
#include "toric/oracle.hpp"
#include "toric/poset_builder.hpp"
#include "toric/poset_invariants.hpp"

using namespace toric;
using testutil::golden_2x4;
using testutil::make_matrix;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

// Posets built anywhere in this run; criterion 6 replays the Moebius
// defining identity over all of them.
std::vector<HasseDiagram>& produced() {
  static std::vector<HasseDiagram> store;
  return store;
}

HasseDiagram record(HasseDiagram h) {
  produced().push_back(h);
  return h;
}

// The instance pool shared by criteria 2 and 4.
const std::vector<IntMatrix>& multiplicity_pool() {
  static const std::vector<IntMatrix> pool = [] {
    std::mt19937 rng(20260819);
    std::vector<std::pair<Index, Index>> shapes;
    for (Index d = 1; d <= 3; ++d)
      for (Index n = d; n <= 5; ++n) shapes.emplace_back(d, n);
    std::vector<IntMatrix> out;
    for (int i = 0; i < 500; ++i) {
      const auto [d, n] = shapes[static_cast<std::size_t>(i) % shapes.size()];
      out.push_back(testutil::random_full_rank(rng, d, n, 4));
    }
    return out;
  }();
  return pool;
}

void criterion_golden_layers() {
  const Clock::time_point start = Clock::now();
  const HasseDiagram h = record(build_layer_poset(golden_2x4()));

  std::map<uint32_t, int> rank_one_by_subset;
  int rank_zero = 0;
  int rank_two = 0;
  for (const LayerRecord& v : h.vertices) {
    if (v.rank == 0) ++rank_zero;
    if (v.rank == 1) ++rank_one_by_subset[v.canonical_name.subset.bits];
    if (v.rank == 2) ++rank_two;
  }
  require(rank_zero == 1, "expected exactly one rank-0 vertex");
  const std::map<uint32_t, int> expected = {
      {0b0001u, 2}, {0b0010u, 1}, {0b0100u, 1}, {0b1000u, 2}};
  require(rank_one_by_subset == expected,
          "rank-1 layers per defining column must be 2, 1, 1, 2");

  const auto torsion = enumerate_torsion_points(golden_2x4());
  require(torsion.size() == 6, "expected six 0-dimensional layers");
  require(rank_two == static_cast<int>(torsion.size()),
          "rank-2 vertex count must match the torsion point count");
  require(seconds_since(start) < 1.0, "golden instance exceeded 1 s");
}

void criterion_multiplicity_identity() {
  const Clock::time_point start = Clock::now();
  for (const IntMatrix& x : multiplicity_pool()) {
    const MatroidCache cache(x);
    const int n = cache.ground_size();
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
      const SubsetId s{bits, n};
      const LayerGroupData g = build_layer_group(cache, s);
      if (g.order != cache.multiplicity_of_set(s)) {
        std::ostringstream msg;
        msg << "group order != multiplicity on subset " << bits << " of\n"
            << testutil::render_matrix(x);
        require(false, msg.str());
      }
    }
  }
  require(seconds_since(start) < 30.0, "multiplicity sweep exceeded 30 s");
}

void criterion_oracle_isomorphism() {
  const Clock::time_point start = Clock::now();
  require(isomorphic_diagrams(record(build_layer_poset(golden_2x4())),
                              brute_force_layer_poset(golden_2x4())),
          "golden instance disagrees with the geometric reconstruction");

  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    const Index n = 2 + static_cast<Index>(i % 3);
    const IntMatrix x = testutil::random_full_rank(rng, 2, n, 2);
    const HasseDiagram built = record(build_layer_poset(x));
    const HasseDiagram oracle = record(brute_force_layer_poset(x));
    if (!isomorphic_diagrams(built, oracle))
      require(false, "sweep disagrees with the geometric reconstruction on\n" +
                         testutil::render_matrix(x));
  }
  require(seconds_since(start) < 60.0, "oracle comparison exceeded 60 s");
}

void criterion_projection_lemmas() {
  std::mt19937 rng(515);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (const IntMatrix& x : multiplicity_pool()) {
    const MatroidCache cache(x);
    const int n = cache.ground_size();
    const Index d = x.rows();
    for (uint32_t bits = 1; bits < (1u << n); ++bits) {
      const SubsetId s{bits, n};
      const LayerGroupData g_s = build_layer_group(cache, s);
      const IntMatrix a_s = cache.row_form(s);
      const auto elements = enumerate_elements(g_s);
      for (const int dropped : s.members()) {
        const SubsetId t = s.without(dropped);
        const LayerGroupData g_t = build_layer_group(cache, t);
        std::set<std::vector<Int>> image;
        for (const GroupElement& h : elements) {
          const GroupElement direct = project(g_s, g_t, h);
          image.insert(direct.residues);

          IntVector z(d);
          for (Index i = 0; i < d; ++i) z(i) = shift(rng);
          const GroupElement moved = canonicalize(g_s, h.lift + a_s * z);
          require(project(g_s, g_t, moved).residues == direct.residues,
                  "projection changed under an image-lattice shift");
        }
        if (cache.rank_of_subset(s) == cache.rank_of_subset(t))
          require(image.size() == group_order(g_s),
                  "projection must embed when the ranks agree");
        else
          require(image.size() == group_order(g_t),
                  "projection must be onto when the rank drops");
      }
    }
  }
}

void criterion_unimodular_degeneration() {
  std::mt19937 rng(616);
  int done = 0;
  while (done < 100) {
    const IntMatrix x = testutil::random_network_tu(rng, 3, 5);
    if (rank(x) != 3) continue;
    require(testutil::is_totally_unimodular(x), "generator produced a non-TU matrix");
    const HasseDiagram layers = record(build_layer_poset(x));
    const HasseDiagram flats = record(build_intersection_lattice(x));
    if (!isomorphic_diagrams(layers, flats))
      require(false, "unimodular instance where layers differ from flats\n" +
                         testutil::render_matrix(x));
    ++done;
  }
}

void criterion_invariant_identities() {
  // Frozen polynomials.
  const auto coeffs = [](const HasseDiagram& h) {
    std::vector<long> out;
    for (const Int& c : characteristic_polynomial(h).coeffs) out.push_back(c.get_si());
    return out;
  };
  const IntMatrix id2 = IntMatrix::Identity(2, 2);
  require(coeffs(record(build_layer_poset(id2))) == std::vector<long>({1, -2, 1}),
          "identity instance: toric polynomial must be t^2 - 2t + 1");
  require(coeffs(record(build_intersection_lattice(id2))) == std::vector<long>({1, -2, 1}),
          "identity instance: flat polynomial must be t^2 - 2t + 1");
  require(coeffs(record(build_layer_poset(make_matrix({{2}})))) == std::vector<long>({-2, 1}),
          "single column (2): polynomial must be t - 2");

  // Defining identity, replayed over every poset this run has built.
  for (const HasseDiagram& h : produced()) {
    const MobiusTable table = mobius(h);
    const std::size_t count = h.vertices.size();
    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
    for (std::size_t v = 0; v < count; ++v) leq[v][v] = true;
    for (const auto& [lo, hi] : h.arcs)
      for (std::size_t u = 0; u < count; ++u)
        if (leq[u][static_cast<std::size_t>(lo)]) leq[u][static_cast<std::size_t>(hi)] = true;
    for (std::size_t v = 0; v < count; ++v) {
      Int sum = 0;
      for (std::size_t u = 0; u < count; ++u)
        if (leq[u][v]) sum += table.values[u];
      require(sum == (h.vertices[v].rank == 0 ? 1 : 0),
              "Moebius defining identity failed");
    }
  }
}

void criterion_smith_forms() {
  std::mt19937 rng(717);
  std::uniform_int_distribution<Index> dim(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index m = dim(rng);
    const Index n = dim(rng);
    const IntMatrix a = testutil::random_matrix(rng, m, n, -9, 9);
    const SmithDecomposition snf = smith_normal_form(a);

    IntMatrix diag = IntMatrix::Zero(m, n);
    for (std::size_t i = 0; i < snf.factors.size(); ++i)
      diag(static_cast<Index>(i), static_cast<Index>(i)) = snf.factors[i];
    require(snf.u * a * snf.v == diag, "U*A*V must equal the diagonal form");

    const Int du = determinant(snf.u);
    const Int dv = determinant(snf.v);
    require(du == 1 || du == -1, "U must be unimodular");
    require(dv == 1 || dv == -1, "V must be unimodular");
    require(snf.u * snf.u_inv == IntMatrix::Identity(m, m), "U_inv must invert U");
    require(snf.v * snf.v_inv == IntMatrix::Identity(n, n), "V_inv must invert V");

    for (std::size_t i = 0; i < snf.factors.size(); ++i) {
      require(snf.factors[i] > 0, "invariant factors must be positive");
      if (i) require(snf.factors[i] % snf.factors[i - 1] == 0,
                     "invariant factors must form a divisibility chain");
    }
  }
}

IntMatrix unimodular_instance(Index n) {
  // Incidence-style columns: at most one +1 and at most one -1 per column.
  // The identity prefix keeps the rank full; repeats are deliberate.
  const std::vector<std::pair<int, int>> pattern = {
      {0, -1}, {1, -1}, {2, -1}, {0, 1},  {0, 2},  {1, 2},  {1, 0},
      {2, 0},  {2, 1},  {0, -1}, {1, -1}, {0, 1},  {1, 2},  {2, 0},
      {0, 2},  {2, -1}, {1, 0},  {2, 1},
  };
  IntMatrix x = IntMatrix::Zero(3, n);
  for (Index j = 0; j < n; ++j) {
    const auto [pos, neg] = pattern[static_cast<std::size_t>(j)];
    x(pos, j) = 1;
    if (neg >= 0) x(neg, j) = -1;
  }
  return x;
}

void criterion_scaling() {
  const IntMatrix x14 = unimodular_instance(14);
  const IntMatrix x15 = unimodular_instance(15);

  Clock::time_point start = Clock::now();
  const HasseDiagram h14 = build_layer_poset(x14);
  const double t14 = seconds_since(start);
  require(t14 < 60.0, "N = 14 build exceeded 60 s");
  require(!h14.vertices.empty(), "N = 14 build produced nothing");

  start = Clock::now();
  const HasseDiagram h15 = build_layer_poset(x15);
  const double t15 = seconds_since(start);
  require(!h15.vertices.empty(), "N = 15 build produced nothing");

  // Subset enumeration doubles from N = 14 to N = 15; allow 2.5x to absorb
  // timer noise on top of the expected ~2.2x growth.
  const double baseline = std::max(t14, 0.05);
  if (t15 > 2.5 * baseline) {
    std::ostringstream msg;
    msg << "scaling ratio too large: t14 = " << t14 << " s, t15 = " << t15 << " s";
    require(false, msg.str());
  }
  std::printf("        (t14 = %.2f s, t15 = %.2f s)\n", t14, t15);
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden instance: layer counts by rank and defining column", criterion_golden_layers},
      {2, "group order equals matroid multiplicity on 500 random instances",
       criterion_multiplicity_identity},
      {3, "sweep output matches geometric reconstruction on 200+ instances",
       criterion_oracle_isomorphism},
      {4, "projection lemmas: shift invariance, embedding, surjectivity",
       criterion_projection_lemmas},
      {5, "100 totally unimodular instances: layers equal flats", criterion_unimodular_degeneration},
      {6, "Moebius identity on every produced poset; frozen polynomials",
       criterion_invariant_identities},
      {7, "Smith form reconstruction on 1000 random matrices", criterion_smith_forms},
      {8, "performance envelope at d = 3, N = 14 and 15", criterion_scaling},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const Clock::time_point start = Clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const CheckFailure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (failure.empty()) {
      std::printf("PASS  criterion %d: %s (%.2f s)\n", c.number, c.label, elapsed);
    } else {
      ++failed;
      std::printf("FAIL  criterion %d: %s (%.2f s)\n      %s\n", c.number, c.label, elapsed,
                  failure.c_str());
    }
    std::fflush(stdout);
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed;
}
