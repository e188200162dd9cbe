#pragma once

#include <concepts>
#include <cstddef>
#include <span>

namespace lcskp {

// Pairwise definitional check: s[a] <= s[b] <=> t[a] <= t[b] for all a, b.
// Quadratic; this is the reference semantics for every faster routine.
template <std::totally_ordered T>
bool order_isomorphic(std::span<const T> s, std::span<const T> t) {
  if (s.size() != t.size()) return false;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if ((s[a] <= s[b]) != (t[a] <= t[b])) return false;
      if ((s[b] <= s[a]) != (t[b] <= t[a])) return false;
    }
  }
  return true;
}

}  // namespace lcskp
