#include "lcskp/oracles.hpp"

namespace lcskp::oracle {

int naive_op_lcs_kplus(OpView x, OpView y, int k) {
  if (k < 2) throw std::invalid_argument("naive_op_lcs_kplus: k >= 2 required");
  const std::size_t m = x.size(), n = y.size(), uk = static_cast<std::size_t>(k);
  std::vector<std::vector<int>> c(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = uk; i <= m; ++i) {
    for (std::size_t j = uk; j <= n; ++j) {
      int best = std::max(c[i][j - 1], c[i - 1][j]);
      for (std::size_t l = uk; l <= std::min(i, j); ++l) {
        if (order_isomorphic(x.subspan(i - l, l), y.subspan(j - l, l))) {
          best = std::max(best, c[i - l][j - l] + static_cast<int>(l));
        }
      }
      c[i][j] = best;
    }
  }
  return c[m][n];
}

std::size_t naive_oplce(OpView s1, OpView s2, std::size_t i1, std::size_t i2) {
  if (i1 < 1 || i1 > s1.size() || i2 < 1 || i2 > s2.size()) throw std::out_of_range("naive_oplce: bad index");
  const std::size_t room = std::min(s1.size() - i1 + 1, s2.size() - i2 + 1);
  std::size_t best = 0;
  for (std::size_t l = 1; l <= room; ++l) {
    if (order_isomorphic(s1.subspan(i1 - 1, l), s2.subspan(i2 - 1, l))) best = l;
  }
  return best;
}

std::vector<std::size_t> naive_z(OpView s, std::size_t i) {
  if (i < 1 || i > s.size()) throw std::out_of_range("naive_z: bad suffix start");
  const OpView t = s.subspan(i - 1);
  std::vector<std::size_t> z(t.size(), 0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t l = 1; j + l <= t.size(); ++l) {
      if (order_isomorphic(t.subspan(0, l), t.subspan(j, l))) z[j] = l;
    }
  }
  return z;
}

NaiveLinks naive_prev_next(OpView s, std::size_t i) {
  if (i < 1 || i > s.size()) throw std::out_of_range("naive_prev_next: bad suffix start");
  const OpView t = s.subspan(i - 1);
  NaiveLinks out{std::vector<std::size_t>(t.size(), 0), std::vector<std::size_t>(t.size(), 0)};
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t q = 0; q < j; ++q) {
      // Largest value <= t[j]; among equal values the rightmost wins.
      if (t[q] <= t[j] && (out.prev[j] == 0 || t[q] >= t[out.prev[j] - 1])) out.prev[j] = q + 1;
      if (t[q] >= t[j] && (out.next[j] == 0 || t[q] <= t[out.next[j] - 1])) out.next[j] = q + 1;
    }
  }
  return out;
}

}  // namespace lcskp::oracle
