#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace toric {

// A subset of the ground set {0, ..., n-1}, stored as a bitmask.
// Members always iterate in increasing index order.
struct SubsetId {
  std::uint32_t bits = 0;
  int n = 0;

  SubsetId() = default;
  SubsetId(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
    assert(n >= 0 && n <= 31);
    assert(n == 0 ? bits == 0 : (bits >> n) == 0);
  }

  static SubsetId empty_set(int n) { return SubsetId(0, n); }
  static SubsetId full_set(int n) {
    return SubsetId(n == 0 ? 0u : (std::uint32_t{1} << n) - 1u, n);
  }

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int i) const { return (bits >> i) & 1u; }
  SubsetId with(int i) const { return SubsetId(bits | (std::uint32_t{1} << i), n); }
  SubsetId without(int i) const { return SubsetId(bits & ~(std::uint32_t{1} << i), n); }
  bool subset_of(SubsetId o) const { return (bits & ~o.bits) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Position of member i within the increasing member order.
  int position_of(int i) const {
    assert(contains(i));
    return std::popcount(bits & ((std::uint32_t{1} << i) - 1u));
  }

  friend bool operator==(SubsetId a, SubsetId b) { return a.bits == b.bits && a.n == b.n; }
  friend bool operator<(SubsetId a, SubsetId b) { return a.bits < b.bits; }
};

// Advance c to the next k-combination of {0, ..., n-1} in lexicographic
// order; false once the last combination has been visited.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace toric
