#pragma once

// Exact LCS in at-least-k-length substrings.
//
// C[i,j] is the answer for the prefixes X[1..i], Y[1..j]. The chunk term of
// the recurrence, max over k <= l <= L[i,j] of C[i-l, j-l] + l, is carried
// along the diagonal in M so every cell costs O(1):
//
//   M[i,j] = max(M[i-1,j-1] + 1, C[i-k,j-k] + k)   if L[i,j] > k
//          = C[i-k,j-k] + k                          if L[i,j] = k
//          = -1                                      otherwise
//
// where L[i,j] is the length of the longest common suffix of the prefixes.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcskp/alignment.hpp"
#include "lcskp/grid.hpp"
#include "lcskp/sequence.hpp"

namespace lcskp {

using Cell = std::int32_t;

// Marks M[i,j] when no chunk of length >= k ends at (i, j).
inline constexpr Cell no_chunk = -1;

struct DpTables {
  Grid<Cell> C;
  Grid<Cell> L;
  Grid<Cell> M;
  int k = 1;
};

namespace detail {

inline void require_exact_k(int k) {
  if (k < 1) throw std::invalid_argument("exact mode requires k >= 1, got " + std::to_string(k));
}

inline Cell chunk_max(Cell l, int k, Cell diag_m, Cell corner_c) noexcept {
  if (l > k) return std::max<Cell>(diag_m + 1, corner_c + k);
  if (l == k) return corner_c + k;
  return no_chunk;
}

}  // namespace detail

template <std::equality_comparable T>
Grid<Cell> compute_L(std::span<const T> x, std::span<const T> y) {
  const std::size_t m = x.size(), n = y.size();
  Grid<Cell> L(m + 1, n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      L(i, j) = x[i - 1] == y[j - 1] ? L(i - 1, j - 1) + 1 : 0;
    }
  }
  return L;
}

template <std::equality_comparable T>
DpTables compute_tables(std::span<const T> x, std::span<const T> y, int k) {
  detail::require_exact_k(k);
  const std::size_t m = x.size(), n = y.size();
  const auto uk = static_cast<std::size_t>(k);
  DpTables t{Grid<Cell>(m + 1, n + 1, 0), Grid<Cell>(m + 1, n + 1, 0), Grid<Cell>(m + 1, n + 1, no_chunk), k};
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Cell l = x[i - 1] == y[j - 1] ? t.L(i - 1, j - 1) + 1 : 0;
      t.L(i, j) = l;
      if (l >= k) t.M(i, j) = detail::chunk_max(l, k, t.M(i - 1, j - 1), t.C(i - uk, j - uk));
      if (i >= uk && j >= uk) t.C(i, j) = std::max({t.C(i, j - 1), t.C(i - 1, j), t.M(i, j)});
    }
  }
  return t;
}

// Length only, keeping k+1 rows of C and one row of L and M. The shorter
// input runs along the rows, so memory is O(k * min(m, n)).
template <std::equality_comparable T>
Cell lcs_kplus_length(std::span<const T> x, std::span<const T> y, int k) {
  detail::require_exact_k(k);
  if (y.size() > x.size()) std::swap(x, y);
  const std::size_t m = x.size(), n = y.size();
  const auto uk = static_cast<std::size_t>(k);
  if (m < uk || n < uk) return 0;

  const std::size_t window = uk + 1;
  std::vector<Cell> c_rows(window * (n + 1), 0);
  std::vector<Cell> l_prev(n + 1, 0), l_cur(n + 1, 0);
  std::vector<Cell> m_prev(n + 1, no_chunk), m_cur(n + 1, no_chunk);
  auto c_row = [&](std::size_t i) { return c_rows.data() + (i % window) * (n + 1); };

  for (std::size_t i = 1; i <= m; ++i) {
    Cell* cur = c_row(i);
    const Cell* up = c_row(i - 1);
    const Cell* corner = i >= uk ? c_row(i - uk) : nullptr;
    cur[0] = 0;
    l_cur[0] = 0;
    m_cur[0] = no_chunk;
    for (std::size_t j = 1; j <= n; ++j) {
      const Cell l = x[i - 1] == y[j - 1] ? l_prev[j - 1] + 1 : 0;
      l_cur[j] = l;
      m_cur[j] = l >= k ? detail::chunk_max(l, k, m_prev[j - 1], corner[j - uk]) : no_chunk;
      cur[j] = i >= uk && j >= uk ? std::max({cur[j - 1], up[j], m_cur[j]}) : 0;
    }
    std::swap(l_prev, l_cur);
    std::swap(m_prev, m_cur);
  }
  return c_row(m)[n];
}

// Walks back from (m, n). A chunk is taken whenever M attains C; its length
// is the largest l in [k, L] with C[i-l, j-l] + l = C[i, j]. Otherwise the
// walk moves left before up.
template <std::equality_comparable T>
ChunkAlignment traceback(const DpTables& t, std::span<const T> x, std::span<const T> y, int k) {
  detail::require_exact_k(k);
  if (t.C.rows() != x.size() + 1 || t.C.cols() != y.size() + 1 || t.k != k) {
    throw std::invalid_argument("traceback: tables do not match the inputs");
  }
  std::vector<Chunk> chunks;
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0 && t.C(i, j) > 0) {
    const Cell c = t.C(i, j);
    if (t.M(i, j) == c) {
      std::size_t l = static_cast<std::size_t>(t.L(i, j));
      while (t.C(i - l, j - l) + static_cast<Cell>(l) != c) --l;
      chunks.push_back({i - l + 1, j - l + 1, l});
      i -= l;
      j -= l;
    } else if (t.C(i, j - 1) == c) {
      --j;
    } else {
      --i;
    }
  }
  return make_alignment(std::move(chunks));
}

inline Grid<Cell> compute_L(std::string_view x, std::string_view y) {
  return compute_L(as_symbols(x), as_symbols(y));
}
inline DpTables compute_tables(std::string_view x, std::string_view y, int k) {
  return compute_tables(as_symbols(x), as_symbols(y), k);
}
inline Cell lcs_kplus_length(std::string_view x, std::string_view y, int k) {
  return lcs_kplus_length(as_symbols(x), as_symbols(y), k);
}
inline ChunkAlignment traceback(const DpTables& t, std::string_view x, std::string_view y, int k) {
  return traceback(t, as_symbols(x), as_symbols(y), k);
}

}  // namespace lcskp
