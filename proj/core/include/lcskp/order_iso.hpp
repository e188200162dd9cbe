#pragma once

// Order-preserving longest common extension (op-LCE) on two numeric strings.
//
// All op-LCE answers for (S1, S2) come from Z-tables of the suffixes of
// S = S1 . S2: opLCE(i1, i2) = min(Z_{S(i1:)}[|S1| - i1 + i2 + 1], |S1| - i1 + 1).
// Each suffix Z-table is linear once its Prev/Next tables are known, and
// those come from a stack sweep over two stable sorts of S computed once.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcskp/order_isomorphic.hpp"
#include "lcskp/sequence.hpp"

namespace lcskp {

inline bool order_isomorphic(OpView s, OpView t) { return order_isomorphic<OpValue>(s, t); }

// 1-based positions of S, stably sorted by value. Ties keep ascending
// position order in both directions.
struct SortedPositions {
  std::vector<std::uint32_t> asc;
  std::vector<std::uint32_t> desc;
};

SortedPositions sort_positions(OpView s);

// A position inside a suffix (1-based), or nullopt for the -inf / +inf sentinel.
using Link = std::optional<std::uint32_t>;

// For the suffix T = S(i:), entry j-1 describes position j of T:
//   prev: the earlier position holding the largest value <= T[j]
//   next: the earlier position holding the smallest value >= T[j]
// Ties resolve to the rightmost such position.
struct PrevNextTables {
  std::vector<Link> prev;
  std::vector<Link> next;

  friend bool operator==(const PrevNextTables&, const PrevNextTables&) = default;
};

// O(|s|): sweeps the shared sorted tables, skipping positions before i.
// Throws std::out_of_range unless 1 <= i <= |s|.
PrevNextTables prev_next_for_suffix(OpView s, std::size_t i, const SortedPositions& sorted);

// Z[j-1] = longest l with T(1:l) ~ T(j:j+l-1), T = S(i:).
using ZTable = std::vector<std::uint32_t>;

// Order-preserving Z-algorithm on S(i:), O(|s|) including the Prev/Next pass.
// Throws std::out_of_range unless 1 <= i <= |s|.
ZTable z_table_for_suffix(OpView s, std::size_t i, const SortedPositions& sorted);

// Can T[0..d] be extended by one symbol? Given pattern T[0..d) ~ text
// T[off..off+d), checks whether T[0..d] ~ T[off..off+d] in O(1).
bool extends_order(OpView t, const PrevNextTables& pn, std::size_t d, std::size_t off) noexcept;

class OpLceTable {
 public:
  OpLceTable() = default;
  OpLceTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // 1-based, unchecked.
  std::uint32_t operator()(std::size_t i1, std::size_t i2) const noexcept {
    return cells_[(i1 - 1) * cols_ + (i2 - 1)];
  }
  std::uint32_t& at_mut(std::size_t i1, std::size_t i2) noexcept { return cells_[(i1 - 1) * cols_ + (i2 - 1)]; }

  // 1-based, bounds-checked.
  std::uint32_t query(std::size_t i1, std::size_t i2) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> cells_;
};

// Full |s1| x |s2| table in O(|s1| * (|s1| + |s2|)) time.
OpLceTable build_oplce_table(OpView s1, OpView s2);

}  // namespace lcskp
