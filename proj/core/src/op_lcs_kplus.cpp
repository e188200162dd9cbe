#include "lcskp/op_lcs_kplus.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace lcskp {

namespace {

void require_op_k(int k) {
  if (k < 2) throw std::invalid_argument("op mode requires k >= 2, got " + std::to_string(k));
}

OpSequence reversed(OpView s) { return OpSequence(s.rbegin(), s.rend()); }

struct Sweep {
  std::size_t m, n, k;
  const OpLceTable& oplce;
  std::vector<DiagonalMaxQueue>& diagonals;

  std::ptrdiff_t lowest() const { return static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n); }
  std::ptrdiff_t highest() const { return static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(k); }

  void make_diagonals() {
    diagonals.clear();
    diagonals.reserve(static_cast<std::size_t>(highest() - lowest() + 1));
    for (std::ptrdiff_t d = lowest(); d <= highest(); ++d) {
      const auto first = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, d));
      const auto last = static_cast<std::size_t>(std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(m),
                                                                           static_cast<std::ptrdiff_t>(n) + d));
      diagonals.emplace_back(last - first + 1);
    }
  }

  DiagonalMaxQueue* queue(std::size_t i, std::size_t j) {
    const auto d = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
    if (d < lowest() || d > highest()) return nullptr;
    return &diagonals[static_cast<std::size_t>(d - lowest())];
  }

  // Row-major over all cells, so each diagonal receives its cells in
  // increasing i. Cells with i < k or j < k hold C = 0 and are pushed too:
  // front positions count every earlier cell of the diagonal.
  template <typename RowAt>
  void run(RowAt row_at) {
    for (std::size_t i = 0; i <= m; ++i) {
      Cell* cur = row_at(i);
      const Cell* up = i > 0 ? row_at(i - 1) : nullptr;
      for (std::size_t j = 0; j <= n; ++j) {
        const auto diag_min = static_cast<Cell>(std::min(i, j));
        DiagonalMaxQueue* q = queue(i, j);
        if (i < k || j < k) {
          cur[j] = 0;
          if (q != nullptr) q->prepend(-diag_min);
          continue;
        }
        std::size_t l = oplce(m - i + 1, n - j + 1);
        assert(l <= std::min(i, j));
        Cell chunk = 0;
        if (l >= k) {
          assert(l <= q->size());
          l = std::min(l, q->size());
          chunk = q->rmq_front_unchecked(k, l).value + diag_min;
        }
        cur[j] = std::max({cur[j - 1], up[j], chunk});
        q->prepend(cur[j] - diag_min);
      }
    }
  }
};

}  // namespace

bool OpDpState::has_diagonal(std::ptrdiff_t d) const noexcept {
  const auto lo = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n);
  return d >= lo && d - lo < static_cast<std::ptrdiff_t>(diagonals.size());
}

const DiagonalMaxQueue& OpDpState::diagonal(std::ptrdiff_t d) const {
  if (!has_diagonal(d)) throw std::out_of_range("no diagonal queue for d = " + std::to_string(d));
  const auto lo = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n);
  return diagonals[static_cast<std::size_t>(d - lo)];
}

OpDpState solve_op_lcs_kplus(OpView x, OpView y, int k) {
  require_op_k(k);
  OpDpState st;
  st.m = x.size();
  st.n = y.size();
  st.k = k;
  st.C = Grid<Cell>(st.m + 1, st.n + 1, 0);
  const auto uk = static_cast<std::size_t>(k);
  if (st.m < uk || st.n < uk) return st;

  st.oplce = build_oplce_table(reversed(x), reversed(y));
  Sweep sweep{st.m, st.n, uk, st.oplce, st.diagonals};
  sweep.make_diagonals();
  sweep.run([&](std::size_t i) { return st.C.row(i); });
  st.length = st.C(st.m, st.n);
  return st;
}

Cell op_lcs_kplus_length(OpView x, OpView y, int k) {
  require_op_k(k);
  const std::size_t m = x.size(), n = y.size();
  const auto uk = static_cast<std::size_t>(k);
  if (m < uk || n < uk) return 0;

  const OpLceTable oplce = build_oplce_table(reversed(x), reversed(y));
  std::vector<DiagonalMaxQueue> diagonals;
  Sweep sweep{m, n, uk, oplce, diagonals};
  sweep.make_diagonals();
  std::vector<Cell> rows(2 * (n + 1), 0);
  sweep.run([&](std::size_t i) { return rows.data() + (i % 2) * (n + 1); });
  return rows[(m % 2) * (n + 1) + n];
}

ChunkAlignment op_traceback(const OpDpState& st, OpView x, OpView y, int k) {
  require_op_k(k);
  if (st.m != x.size() || st.n != y.size() || st.k != k || st.C.rows() != st.m + 1 || st.C.cols() != st.n + 1) {
    throw std::invalid_argument("op_traceback: state does not match the inputs");
  }
  const auto uk = static_cast<std::size_t>(k);
  std::vector<Chunk> chunks;
  std::size_t i = st.m, j = st.n;
  while (i > 0 && j > 0 && st.C(i, j) > 0) {
    const Cell c = st.C(i, j);
    const std::size_t l = st.oplce(st.m - i + 1, st.n - j + 1);
    if (l >= uk) {
      // The queue now also holds the cells after (i, j) on this diagonal.
      // Cell (i - l, j - l) was element min(i, j) - l + 1, so its front
      // position today is shift + l.
      const DiagonalMaxQueue& q =
          st.diagonal(static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j));
      const std::size_t shift = q.size() - std::min(i, j);
      const auto hit = q.rmq_front(shift + uk, shift + l);
      if (hit.value + static_cast<Cell>(std::min(i, j)) == c) {
        const std::size_t len = hit.position - shift;
        chunks.push_back({i - len + 1, j - len + 1, len});
        i -= len;
        j -= len;
        continue;
      }
    }
    if (st.C(i, j - 1) == c) {
      --j;
    } else {
      --i;
    }
  }
  return make_alignment(std::move(chunks));
}

}  // namespace lcskp
