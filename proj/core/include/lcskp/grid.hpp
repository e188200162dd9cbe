#pragma once

#include <cstddef>
#include <vector>

namespace lcskp {

// Dense row-major 2D table. Rows and columns are 0-based; the DP tables use
// row 0 / column 0 for the empty prefix, so cell (i, j) covers X[1..i], Y[1..j].
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }

  T* row(std::size_t i) noexcept { return cells_.data() + i * cols_; }
  const T* row(std::size_t i) const noexcept { return cells_.data() + i * cols_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

}  // namespace lcskp
