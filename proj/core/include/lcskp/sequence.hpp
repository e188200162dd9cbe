#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcskp {

// Numeric symbol type for the order-isomorphic variant.
using OpValue = std::int64_t;

using OpSequence = std::vector<OpValue>;
using OpView = std::span<const OpValue>;

enum class Mode { exact, order_isomorphic };

struct Params {
  int k = 1;
  Mode mode = Mode::exact;
};

// Smallest admissible k: chunks of length one carry no order information,
// so the order-isomorphic variant starts at two.
constexpr int min_k(Mode mode) noexcept { return mode == Mode::exact ? 1 : 2; }

inline void require_valid(const Params& params) {
  if (params.k < min_k(params.mode)) {
    throw std::invalid_argument(params.mode == Mode::exact
                                    ? "exact mode requires k >= 1, got " + std::to_string(params.k)
                                    : "op mode requires k >= 2, got " + std::to_string(params.k));
  }
}

inline std::span<const char> as_symbols(std::string_view s) noexcept { return {s.data(), s.size()}; }

}  // namespace lcskp
