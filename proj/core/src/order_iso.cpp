#include "lcskp/order_iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lcskp {

SortedPositions sort_positions(OpView s) {
  SortedPositions out;
  out.asc.resize(s.size());
  std::iota(out.asc.begin(), out.asc.end(), 1u);
  out.desc = out.asc;
  std::stable_sort(out.asc.begin(), out.asc.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return s[a - 1] < s[b - 1]; });
  std::stable_sort(out.desc.begin(), out.desc.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return s[a - 1] > s[b - 1]; });
  return out;
}

namespace {

void require_suffix_start(OpView s, std::size_t i, const char* what) {
  if (i < 1 || i > s.size()) {
    throw std::out_of_range(std::string(what) + ": suffix start " + std::to_string(i) +
                            " outside 1.." + std::to_string(s.size()));
  }
}

// One stack sweep over a sorted order. Each kept position links to the
// nearest-in-order earlier position; larger positions are popped since a
// later, closer-valued candidate dominates them.
void sweep(const std::vector<std::uint32_t>& order, std::size_t i, std::vector<Link>& out,
           std::vector<std::uint32_t>& stack) {
  stack.clear();
  const auto base = static_cast<std::uint32_t>(i - 1);
  for (const std::uint32_t p : order) {
    if (p < i) continue;
    while (!stack.empty() && stack.back() > p) stack.pop_back();
    out[p - i] = stack.empty() ? Link{} : Link{stack.back() - base};
    stack.push_back(p);
  }
}

}  // namespace

PrevNextTables prev_next_for_suffix(OpView s, std::size_t i, const SortedPositions& sorted) {
  require_suffix_start(s, i, "prev_next_for_suffix");
  if (sorted.asc.size() != s.size() || sorted.desc.size() != s.size()) {
    throw std::invalid_argument("prev_next_for_suffix: sorted positions built for a different sequence");
  }
  const std::size_t len = s.size() - i + 1;
  PrevNextTables pn{std::vector<Link>(len), std::vector<Link>(len)};
  std::vector<std::uint32_t> stack;
  stack.reserve(len);
  sweep(sorted.asc, i, pn.prev, stack);
  sweep(sorted.desc, i, pn.next, stack);
  return pn;
}

bool extends_order(OpView t, const PrevNextTables& pn, std::size_t d, std::size_t off) noexcept {
  const OpValue pd = t[d];
  const OpValue td = t[off + d];
  if (const Link a = pn.prev[d]) {
    const OpValue pa = t[*a - 1];
    const OpValue ta = t[off + *a - 1];
    if (pa == pd ? ta != td : !(ta < td)) return false;
  }
  if (const Link b = pn.next[d]) {
    const OpValue pb = t[*b - 1];
    const OpValue tb = t[off + *b - 1];
    if (pb == pd ? tb != td : !(tb > td)) return false;
  }
  return true;
}

ZTable z_table_for_suffix(OpView s, std::size_t i, const SortedPositions& sorted) {
  require_suffix_start(s, i, "z_table_for_suffix");
  const PrevNextTables pn = prev_next_for_suffix(s, i, sorted);
  const OpView t = s.subspan(i - 1);
  const std::size_t n = t.size();
  ZTable z(n, 0);
  z[0] = static_cast<std::uint32_t>(n);
  // Window [lo, hi): t[0, hi-lo) ~ t[lo, hi).
  std::size_t lo = 0, hi = 0;
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t len = 0;
    if (j < hi) {
      len = std::min<std::size_t>(z[j - lo], hi - j);
      if (len < hi - j) {
        z[j] = static_cast<std::uint32_t>(len);
        continue;
      }
    }
    while (j + len < n && extends_order(t, pn, len, j)) ++len;
    z[j] = static_cast<std::uint32_t>(len);
    if (j + len > hi) {
      lo = j;
      hi = j + len;
    }
  }
  return z;
}

std::uint32_t OpLceTable::query(std::size_t i1, std::size_t i2) const {
  if (i1 < 1 || i1 > rows_ || i2 < 1 || i2 > cols_) {
    throw std::out_of_range("op-LCE query (" + std::to_string(i1) + ", " + std::to_string(i2) +
                            ") outside " + std::to_string(rows_) + " x " + std::to_string(cols_));
  }
  return (*this)(i1, i2);
}

OpLceTable build_oplce_table(OpView s1, OpView s2) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  OpLceTable table(n1, n2);
  if (n1 == 0 || n2 == 0) return table;

  OpSequence s;
  s.reserve(n1 + n2);
  s.insert(s.end(), s1.begin(), s1.end());
  s.insert(s.end(), s2.begin(), s2.end());
  const SortedPositions sorted = sort_positions(s);

  for (std::size_t i1 = 1; i1 <= n1; ++i1) {
    const ZTable z = z_table_for_suffix(s, i1, sorted);
    const auto cap = static_cast<std::uint32_t>(n1 - i1 + 1);
    for (std::size_t i2 = 1; i2 <= n2; ++i2) {
      // 1-based Z index n1 - i1 + i2 + 1 is the start of S2(i2:) inside S(i1:).
      table.at_mut(i1, i2) = std::min(z[n1 - i1 + i2], cap);
    }
  }
  return table;
}

}  // namespace lcskp
