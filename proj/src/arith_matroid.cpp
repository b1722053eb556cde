#include "toric/arith_matroid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

MatroidCache::MatroidCache(IntMatrix x)
    : x_(std::move(x)),
      d_(static_cast<int>(x_.rows())),
      n_(static_cast<int>(x_.cols())) {
  if (n_ > kMaxGroundSetHard)
    throw GroundSetTooLarge("N=" + std::to_string(n_) + " columns exceed the memo-table ceiling " +
                            std::to_string(kMaxGroundSetHard));
  const std::size_t slots = std::size_t{1} << n_;
  rank_memo_.assign(slots, -1);
  mult_memo_.assign(slots, Int(0));
}

IntMatrix MatroidCache::column_submatrix(SubsetId s) const {
  const auto mem = s.members();
  IntMatrix sub(d_, static_cast<Index>(mem.size()));
  for (std::size_t j = 0; j < mem.size(); ++j) sub.col(static_cast<Index>(j)) = x_.col(mem[j]);
  return sub;
}

IntMatrix MatroidCache::row_form(SubsetId s) const {
  const auto mem = s.members();
  IntMatrix sub(static_cast<Index>(mem.size()), d_);
  for (std::size_t i = 0; i < mem.size(); ++i)
    sub.row(static_cast<Index>(i)) = x_.col(mem[i]).transpose();
  return sub;
}

int MatroidCache::rank_of_subset(SubsetId s) const {
  auto& slot = rank_memo_[s.bits];
  if (slot < 0) slot = static_cast<std::int8_t>(rank(column_submatrix(s)));
  return slot;
}

const Int& MatroidCache::multiplicity_of_set(SubsetId s) const {
  Int& slot = mult_memo_[s.bits];
  if (slot != 0) return slot;

  const int rho = rank_of_subset(s);
  if (rho == s.size()) {
    slot = gcd_of_maximal_minors(column_submatrix(s));
    return slot;
  }

  // gcd over the bases (maximal independent subsets) contained in s.
  const auto mem = s.members();
  std::vector<int> pick(static_cast<std::size_t>(rho));
  std::iota(pick.begin(), pick.end(), 0);
  Int g = 0;
  do {
    std::uint32_t bbits = 0;
    for (int p : pick) bbits |= std::uint32_t{1} << mem[static_cast<std::size_t>(p)];
    const SubsetId b(bbits, s.n);
    if (rank_of_subset(b) != rho) continue;
    g = gcd(g, multiplicity_of_set(b));
    if (g == 1) break;
  } while (next_combination(pick, static_cast<int>(mem.size())));
  slot = g;
  return slot;
}

}  // namespace toric
