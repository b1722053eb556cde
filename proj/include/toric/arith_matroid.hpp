#pragma once

#include <cstdint>
#include <vector>

#include "toric/errors.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/subset.hpp"

namespace toric {

// Memo tables are allocated eagerly at 2^n entries; refuse anything that
// would make them silly.
inline constexpr int kMaxGroundSetHard = 24;

// Rank and multiplicity queries over column subsets of a fixed integer
// matrix. Both are memoized in flat tables indexed by bitmask.
//
// For an independent subset the multiplicity is the gcd of its maximal
// minors; for a dependent subset it is the gcd of the multiplicities of the
// bases contained in it. The empty set has multiplicity 1.
//
// Lookups fill lazily. Fill from one thread, then share read-only.
class MatroidCache {
 public:
  explicit MatroidCache(IntMatrix x);

  const IntMatrix& matrix() const { return x_; }
  int ground_size() const { return n_; }
  int ambient_dim() const { return d_; }

  int rank_of_subset(SubsetId s) const;
  const Int& multiplicity_of_set(SubsetId s) const;
  bool is_independent(SubsetId s) const { return rank_of_subset(s) == s.size(); }

  IntMatrix column_submatrix(SubsetId s) const;  // X[S], d x |S|
  IntMatrix row_form(SubsetId s) const;          // X[S]^t, |S| x d

 private:
  IntMatrix x_;
  int d_ = 0;
  int n_ = 0;
  mutable std::vector<std::int8_t> rank_memo_;  // -1 = not yet computed
  mutable std::vector<Int> mult_memo_;          // 0 = not yet computed
};

}  // namespace toric
