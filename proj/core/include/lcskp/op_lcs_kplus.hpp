#pragma once

// Order-isomorphic LCS in at-least-k-length substrings, O(mn) time.
//
// The longest order-isomorphic common suffix of X[1..i] and Y[1..j] is an
// op-LCE answer on the reversed inputs. The chunk term, max over
// k <= l <= that length of C[i-l, j-l] + l, is a range maximum along the
// diagonal i - j. Each diagonal keeps a front-indexed queue of
// C[i', j'] - min(i', j'); at cell (i, j) front position l holds cell
// (i-l, j-l), whose stored value is C[i-l, j-l] + l - min(i, j), so one
// range query over positions [k, l] plus min(i, j) gives the chunk term.

#include <cstddef>
#include <vector>

#include "lcskp/alignment.hpp"
#include "lcskp/grid.hpp"
#include "lcskp/lcs_kplus.hpp"
#include "lcskp/order_iso.hpp"
#include "lcskp/rmq.hpp"
#include "lcskp/sequence.hpp"

namespace lcskp {

struct OpDpState {
  std::size_t m = 0;
  std::size_t n = 0;
  int k = 2;
  Cell length = 0;
  Grid<Cell> C;
  // Built on reverse(x), reverse(y).
  OpLceTable oplce;
  // Queue of diagonal d = i - j lives at index d - (k - n), for k - n <= d <= m - k.
  std::vector<DiagonalMaxQueue> diagonals;

  bool has_diagonal(std::ptrdiff_t d) const noexcept;
  const DiagonalMaxQueue& diagonal(std::ptrdiff_t d) const;
};

// Runs the full sweep and keeps C, the op-LCE table and every diagonal queue.
// Throws std::invalid_argument for k < 2.
OpDpState solve_op_lcs_kplus(OpView x, OpView y, int k);

// Same sweep keeping two rows of C.
Cell op_lcs_kplus_length(OpView x, OpView y, int k);

// Chunk lengths come from the position the diagonal queue reports for the
// maximizing front position. Throws std::invalid_argument when `state` was not
// produced for (x, y, k).
ChunkAlignment op_traceback(const OpDpState& state, OpView x, OpView y, int k);

}  // namespace lcskp
