#pragma once

// Brute-force reference implementations. They evaluate the definitions
// directly (polynomial but slow) and share nothing with the fast paths
// except the sequence types and the pairwise order-isomorphism predicate.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcskp/order_isomorphic.hpp"
#include "lcskp/sequence.hpp"

namespace lcskp::oracle {

// C[i][j] = max(C[i][j-1], C[i-1][j], max_l C[i-l][j-l] + l) with the chunk
// test done by comparing the two substrings symbol by symbol for every l.
template <std::equality_comparable T>
int naive_lcs_kplus(std::span<const T> x, std::span<const T> y, int k) {
  if (k < 1) throw std::invalid_argument("naive_lcs_kplus: k >= 1 required");
  const std::size_t m = x.size(), n = y.size(), uk = static_cast<std::size_t>(k);
  std::vector<std::vector<int>> c(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = uk; i <= m; ++i) {
    for (std::size_t j = uk; j <= n; ++j) {
      int best = std::max(c[i][j - 1], c[i - 1][j]);
      for (std::size_t l = uk; l <= std::min(i, j); ++l) {
        if (std::equal(x.begin() + (i - l), x.begin() + i, y.begin() + (j - l))) {
          best = std::max(best, c[i - l][j - l] + static_cast<int>(l));
        }
      }
      c[i][j] = best;
    }
  }
  return c[m][n];
}

template <std::equality_comparable T>
int textbook_lcs(std::span<const T> x, std::span<const T> y) {
  std::vector<std::vector<int>> c(x.size() + 1, std::vector<int>(y.size() + 1, 0));
  for (std::size_t i = 1; i <= x.size(); ++i)
    for (std::size_t j = 1; j <= y.size(); ++j)
      c[i][j] = x[i - 1] == y[j - 1] ? c[i - 1][j - 1] + 1 : std::max(c[i - 1][j], c[i][j - 1]);
  return c[x.size()][y.size()];
}

// Longest l with x(i-l+1 : i) == y(j-l+1 : j), testing every l.
template <std::equality_comparable T>
int naive_common_suffix(std::span<const T> x, std::span<const T> y, std::size_t i, std::size_t j) {
  int best = 0;
  for (std::size_t l = 1; l <= std::min(i, j); ++l) {
    if (std::equal(x.begin() + (i - l), x.begin() + i, y.begin() + (j - l))) best = static_cast<int>(l);
  }
  return best;
}

inline int naive_lcs_kplus(std::string_view x, std::string_view y, int k) {
  return naive_lcs_kplus(as_symbols(x), as_symbols(y), k);
}

// Same recurrence, chunk test by the pairwise order-isomorphism predicate.
int naive_op_lcs_kplus(OpView x, OpView y, int k);

// max l with s1(i1 : i1+l-1) ~ s2(i2 : i2+l-1); 1-based.
std::size_t naive_oplce(OpView s1, OpView s2, std::size_t i1, std::size_t i2);

// Z-table of s(i:) by testing every offset and length.
std::vector<std::size_t> naive_z(OpView s, std::size_t i);

// Prev/Next of s(i:) by definition. Entries are 1-based positions inside the
// suffix, 0 for the sentinel.
struct NaiveLinks {
  std::vector<std::size_t> prev;
  std::vector<std::size_t> next;
};
NaiveLinks naive_prev_next(OpView s, std::size_t i);

// (minimum of values[a..b], leftmost 1-based position holding it).
template <std::totally_ordered T>
std::pair<T, std::size_t> scan_rmq(std::span<const T> values, std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > values.size()) throw std::out_of_range("scan_rmq: bad range");
  std::size_t best = a;
  for (std::size_t p = a + 1; p <= b; ++p)
    if (values[p - 1] < values[best - 1]) best = p;
  return {values[best - 1], best};
}

template <std::totally_ordered T>
std::pair<T, std::size_t> scan_rmq_max(std::span<const T> values, std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > values.size()) throw std::out_of_range("scan_rmq_max: bad range");
  std::size_t best = a;
  for (std::size_t p = a + 1; p <= b; ++p)
    if (values[p - 1] > values[best - 1]) best = p;
  return {values[best - 1], best};
}

}  // namespace lcskp::oracle
