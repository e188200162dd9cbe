#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcskp/order_isomorphic.hpp"
#include "lcskp/sequence.hpp"

namespace lcskp {

// One matched chunk. Positions are 1-based: X[x .. x+len-1] pairs with Y[y .. y+len-1].
struct Chunk {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t len = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct ChunkAlignment {
  std::vector<Chunk> chunks;
  std::size_t total = 0;

  friend bool operator==(const ChunkAlignment&, const ChunkAlignment&) = default;
};

// Builds an alignment from chunks listed in any order (tracebacks emit them
// back to front); sorts by position and fills in the total.
inline ChunkAlignment make_alignment(std::vector<Chunk> chunks) {
  std::sort(chunks.begin(), chunks.end(), [](const Chunk& a, const Chunk& b) { return a.x < b.x; });
  ChunkAlignment out;
  for (const auto& c : chunks) out.total += c.len;
  out.chunks = std::move(chunks);
  return out;
}

// True iff `a` witnesses a common subsequence in at-least-k chunks of x and y
// under params.mode. Never throws; any violation (including an invalid k)
// yields false. Chunks are checked independently: the concatenation of the
// chunks is not required to match as a whole.
template <std::equality_comparable T>
bool validate_alignment(std::span<const T> x, std::span<const T> y, const Params& params,
                        const ChunkAlignment& a) {
  if (params.k < min_k(params.mode)) return false;
  const auto k = static_cast<std::size_t>(params.k);
  std::size_t sum = 0;
  for (std::size_t s = 0; s < a.chunks.size(); ++s) {
    const Chunk& c = a.chunks[s];
    if (c.len < k || c.x < 1 || c.y < 1) return false;
    if (c.x + c.len - 1 > x.size() || c.y + c.len - 1 > y.size()) return false;
    if (s + 1 < a.chunks.size()) {
      const Chunk& next = a.chunks[s + 1];
      if (c.x + c.len > next.x || c.y + c.len > next.y) return false;
    }
    auto xs = x.subspan(c.x - 1, c.len);
    auto ys = y.subspan(c.y - 1, c.len);
    if (params.mode == Mode::exact) {
      if (!std::equal(xs.begin(), xs.end(), ys.begin())) return false;
    } else {
      if constexpr (std::totally_ordered<T>) {
        if (!order_isomorphic(xs, ys)) return false;
      } else {
        return false;
      }
    }
    sum += c.len;
  }
  return sum == a.total;
}

inline bool validate_alignment(std::string_view x, std::string_view y, const Params& params,
                               const ChunkAlignment& a) {
  return validate_alignment(as_symbols(x), as_symbols(y), params, a);
}

// {"total": N, "chunks": [{"x": i, "y": j, "len": l}, ...]}, positions 1-based.
std::string to_json(const ChunkAlignment& a);

// Inverse of to_json. Throws std::invalid_argument on malformed input.
ChunkAlignment alignment_from_json(std::string_view text);

}  // namespace lcskp
