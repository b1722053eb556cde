#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "toric/layer_groups.hpp"

using namespace toric;
using testutil::golden_2x4;
using testutil::make_matrix;
using testutil::make_vector;

namespace {

std::vector<Int> residue_key(const GroupElement& e) { return e.residues; }

}  // namespace

TEST_CASE("single column (2): cyclic group of order 2") {
  const MatroidCache cache(make_matrix({{2}}));
  const LayerGroupData g = build_layer_group(cache, SubsetId::full_set(1));
  CHECK(g.r == 1);
  CHECK(g.order == 2);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == 2);

  const auto elements = enumerate_elements(g);
  REQUIRE(elements.size() == 2);
  CHECK(elements[0].residues[0] == 0);
  CHECK(elements[1].residues[0] == 1);
}

TEST_CASE("golden instance, columns {1,4}: group is Z/2 x Z/2") {
  const MatroidCache cache(golden_2x4());
  const LayerGroupData g = build_layer_group(cache, SubsetId(0b1001, 4));
  CHECK(g.order == 4);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0] == 2);
  CHECK(g.factors[1] == 2);
  CHECK(g.order == cache.multiplicity_of_set(SubsetId(0b1001, 4)));
}

TEST_CASE("group order equals multiplicity for every subset") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix x = testutil::random_matrix(rng, 3, 5, -4, 4);
    const MatroidCache cache(x);
    const int n = cache.ground_size();
    for (std::uint32_t mask = 0; mask <= SubsetId::full_set(n).bits; ++mask) {
      const SubsetId s(mask, n);
      const LayerGroupData g = build_layer_group(cache, s);
      CHECK(g.order == cache.multiplicity_of_set(s));
    }
  }
}

TEST_CASE("empty subset carries the trivial group") {
  const MatroidCache cache(golden_2x4());
  const LayerGroupData g = build_layer_group(cache, SubsetId::empty_set(4));
  CHECK(g.r == 0);
  CHECK(g.order == 1);
  const auto elements = enumerate_elements(g);
  REQUIRE(elements.size() == 1);
  CHECK(elements[0].lift.size() == 0);
  CHECK(canonicalize(g, IntVector(0)).residues.empty());
}

TEST_CASE("canonicalize accepts exactly the feasible offsets") {
  // Columns (1,0) and (2,0): feasible tuples are (a, 2a).
  const MatroidCache cache(make_matrix({{1, 2}, {0, 0}}));
  const LayerGroupData g = build_layer_group(cache, SubsetId::full_set(2));
  CHECK_NOTHROW(canonicalize(g, make_vector({1, 2})));
  CHECK_NOTHROW(canonicalize(g, make_vector({-3, -6})));
  CHECK_THROWS_AS(canonicalize(g, make_vector({0, 1})), NotInW);
  CHECK_THROWS_AS(canonicalize(g, make_vector({1, 1})), NotInW);
  CHECK_THROWS_AS(canonicalize(g, make_vector({1})), std::invalid_argument);
}

TEST_CASE("canonicalize is constant on cosets of the image lattice") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix x = testutil::random_matrix(rng, 2, 4, -3, 3);
    const MatroidCache cache(x);
    for (std::uint32_t mask = 1; mask <= SubsetId::full_set(4).bits; ++mask) {
      const SubsetId s(mask, 4);
      const LayerGroupData g = build_layer_group(cache, s);
      const IntMatrix a_s = cache.row_form(s);
      for (const GroupElement& e : enumerate_elements(g)) {
        IntVector z(2);
        z(0) = shift(rng);
        z(1) = shift(rng);
        const IntVector shifted = e.lift + a_s * z;
        const GroupElement back = canonicalize(g, shifted);
        CHECK(residue_key(back) == residue_key(e));
        CHECK(compare_lex(back.lift, e.lift) == 0);
      }
    }
  }
}

TEST_CASE("canonical lifts are idempotent and indexable") {
  const MatroidCache cache(golden_2x4());
  for (std::uint32_t mask = 0; mask <= SubsetId::full_set(4).bits; ++mask) {
    const SubsetId s(mask, 4);
    const LayerGroupData g = build_layer_group(cache, s);
    const auto elements = enumerate_elements(g);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      CHECK(element_index(g, elements[i]) == i);
      CHECK(canonical_index(g, elements[i].lift) == i);
      const GroupElement again = canonicalize(g, elements[i].lift);
      CHECK(residue_key(again) == residue_key(elements[i]));
    }
  }
}

TEST_CASE("projection drops one coordinate: golden {1,2} -> {1}") {
  const MatroidCache cache(golden_2x4());
  const LayerGroupData g_s = build_layer_group(cache, SubsetId(0b0011, 4));
  const LayerGroupData g_t = build_layer_group(cache, SubsetId(0b0001, 4));
  REQUIRE(g_s.order == 2);
  REQUIRE(g_t.order == 2);

  const auto elements = enumerate_elements(g_s);
  std::set<std::vector<Int>> images;
  for (const GroupElement& h : elements) images.insert(project(g_s, g_t, h).residues);
  CHECK(images.size() == 2);
}

TEST_CASE("projection rejects non-codimension-one pairs") {
  const MatroidCache cache(golden_2x4());
  const LayerGroupData g_s = build_layer_group(cache, SubsetId(0b0111, 4));
  const LayerGroupData g_t = build_layer_group(cache, SubsetId(0b0001, 4));
  const LayerGroupData g_u = build_layer_group(cache, SubsetId(0b1000, 4));
  const GroupElement h = zero_element(g_s);
  CHECK_THROWS_AS(project(g_s, g_t, h), NotCodimOne);
  CHECK_THROWS_AS(project(g_s, g_u, h), NotCodimOne);
}

TEST_CASE("projection embeds on equal ranks and is onto when the rank drops") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix x = testutil::random_matrix(rng, 2, 4, -3, 3);
    const MatroidCache cache(x);
    const int n = cache.ground_size();
    for (std::uint32_t mask = 1; mask <= SubsetId::full_set(n).bits; ++mask) {
      const SubsetId s(mask, n);
      const LayerGroupData g_s = build_layer_group(cache, s);
      for (int i : s.members()) {
        const SubsetId t = s.without(i);
        const LayerGroupData g_t = build_layer_group(cache, t);
        std::set<std::vector<Int>> images;
        for (const GroupElement& h : enumerate_elements(g_s))
          images.insert(project(g_s, g_t, h).residues);
        if (cache.rank_of_subset(s) == cache.rank_of_subset(t))
          CHECK(images.size() == group_order(g_s));
        else
          CHECK(images.size() == group_order(g_t));
      }
    }
  }
}

TEST_CASE("projection commutes with the group law") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const IntMatrix x = testutil::random_matrix(rng, 2, 3, -3, 3);
    const MatroidCache cache(x);
    const int n = cache.ground_size();
    for (std::uint32_t mask = 1; mask <= SubsetId::full_set(n).bits; ++mask) {
      const SubsetId s(mask, n);
      const LayerGroupData g_s = build_layer_group(cache, s);
      if (group_order(g_s) > 12) continue;
      const auto elements = enumerate_elements(g_s);
      for (int i : s.members()) {
        const LayerGroupData g_t = build_layer_group(cache, s.without(i));
        for (const GroupElement& a : elements)
          for (const GroupElement& b : elements) {
            const GroupElement sum_then_project = project(g_s, g_t, add(g_s, a, b));
            const GroupElement project_then_sum =
                add(g_t, project(g_s, g_t, a), project(g_s, g_t, b));
            CHECK(residue_key(sum_then_project) == residue_key(project_then_sum));
          }
      }
    }
  }
}

TEST_CASE("table construction covers every subset") {
  const MatroidCache cache(golden_2x4());
  const auto table = build_layer_group_table(cache);
  REQUIRE(table.size() == 16);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    CHECK(table[mask].subset.bits == mask);
    CHECK(table[mask].order == cache.multiplicity_of_set(table[mask].subset));
  }
}
