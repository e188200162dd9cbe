#pragma once

// Semi-dynamic range minimum / maximum.
//
// Values are appended to a 2d-Min-Heap (parent of node i is the nearest
// earlier node with a strictly smaller value; node 0 is a virtual -inf root).
// Appending only ever extends the Euler tour of that tree at its end, so the
// tour and its depth array can be indexed online. A range minimum over
// positions [i1, i2] is then an LCA query, answered by a +-1 RMQ over the
// depths between the first visits of i1 and i2.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcskp {

// Range argmin over an append-only array whose neighbours differ by exactly 1.
//
// Blocks of size B (half the bit length of the capacity) are classified by
// their step bitmask; in-block queries go to lookup tables shared by every
// instance with the same B. Whole-block ranges use a sparse table whose
// entries are indexed by the block they end at, so a completed block adds
// O(log n) entries and nothing already stored changes. When the capacity is
// exhausted it doubles and the block structure is rebuilt.
class PlusMinusOneRmq {
 public:
  PlusMinusOneRmq() : PlusMinusOneRmq(0) {}
  explicit PlusMinusOneRmq(std::size_t capacity);

  // Requires |depth - back()| == 1 unless empty (checked).
  void push_back(std::int32_t depth);

  std::size_t size() const noexcept { return depth_.size(); }
  bool empty() const noexcept { return depth_.empty(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t block_size() const noexcept { return block_; }
  std::int32_t operator[](std::size_t p) const noexcept { return depth_[p]; }
  std::span<const std::int32_t> depths() const noexcept { return depth_; }

  // Index of the rightmost minimum of depth[a..b], 0-based inclusive.
  std::size_t argmin(std::size_t a, std::size_t b) const;
  std::size_t argmin_unchecked(std::size_t a, std::size_t b) const noexcept;

 private:
  struct InBlockTable;
  static const InBlockTable& table_for(std::size_t block);

  void rebuild(std::size_t capacity);
  void index_last();
  void close_block(std::size_t q);
  std::size_t pick(std::size_t a, std::size_t b) const noexcept {
    return depth_[b] < depth_[a] || (depth_[b] == depth_[a] && b > a) ? b : a;
  }
  std::size_t sparse(std::size_t level, std::size_t end_block) const noexcept {
    return sparse_[level][end_block + 1 - (std::size_t{1} << level)];
  }
  std::size_t in_block(std::size_t q, std::size_t lo, std::size_t hi) const noexcept;

  std::size_t capacity_ = 0;
  std::size_t block_ = 1;
  const InBlockTable* table_ = nullptr;
  std::vector<std::int32_t> depth_;
  std::vector<std::uint16_t> masks_;
  // sparse_[lv][q + 1 - 2^lv]: rightmost argmin over blocks (q - 2^lv, q].
  std::vector<std::vector<std::uint32_t>> sparse_;
};

// 2d-Min-Heap over appended values with an online Euler tour. Compare
// defines "smaller"; std::greater turns it into a max structure.
template <typename T, typename Compare = std::less<T>>
class TwoDMinHeap {
 public:
  TwoDMinHeap() : TwoDMinHeap(0) {}

  // `capacity` is the expected number of appends; exceeding it is allowed.
  explicit TwoDMinHeap(std::size_t capacity, Compare less = Compare{})
      : depth_(2 * capacity + 1), less_(less) {
    values_.reserve(capacity);
    first_.reserve(capacity);
    euler_.reserve(2 * capacity + 1);
    euler_.push_back(0);
    depth_.push_back(0);
  }

  // Pops rightmost-path nodes that are not smaller than x (one Euler step up
  // each), then descends into the new node. Amortized O(1).
  void append(const T& x) {
    while (!path_.empty() && !less_(values_[path_.back() - 1], x)) {
      path_.pop_back();
      euler_.push_back(path_.empty() ? 0 : path_.back());
      depth_.push_back(static_cast<std::int32_t>(path_.size()));
    }
    const auto node = static_cast<std::uint32_t>(values_.size() + 1);
    values_.push_back(x);
    path_.push_back(node);
    first_.push_back(static_cast<std::uint32_t>(euler_.size()));
    euler_.push_back(node);
    depth_.push_back(static_cast<std::int32_t>(path_.size()));
  }

  std::size_t size() const noexcept { return values_.size(); }

  // 1-based.
  const T& value(std::size_t i) const noexcept { return values_[i - 1]; }
  std::size_t parent(std::size_t i) const noexcept { return euler_[first_[i - 1] - 1]; }

  // E, D and Y of the tour; Y[i-1] is the first tour index of node i.
  std::span<const std::uint32_t> euler_nodes() const noexcept { return euler_; }
  std::span<const std::int32_t> euler_depths() const noexcept { return depth_.depths(); }
  std::span<const std::uint32_t> first_visit() const noexcept { return first_; }

  // Position of a minimum of X[i1..i2], 1-based. Throws std::out_of_range
  // unless 1 <= i1 <= i2 <= size().
  std::size_t rmq_positions(std::size_t i1, std::size_t i2) const {
    if (i1 < 1 || i1 > i2 || i2 > size()) {
      throw std::out_of_range("rmq(" + std::to_string(i1) + ", " + std::to_string(i2) + ") outside 1.." +
                              std::to_string(size()));
    }
    return rmq_positions_unchecked(i1, i2);
  }

  // If the LCA of i1 and i2 is i1 itself, i1 is the answer; otherwise it is
  // the LCA's child towards i2, which follows the rightmost LCA visit.
  std::size_t rmq_positions_unchecked(std::size_t i1, std::size_t i2) const noexcept {
    const std::size_t j = depth_.argmin_unchecked(first_[i1 - 1], first_[i2 - 1]);
    return euler_[j] == i1 ? i1 : euler_[j + 1];
  }

 private:
  std::vector<T> values_;
  std::vector<std::uint32_t> euler_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> path_;
  PlusMinusOneRmq depth_;
  Compare less_;
};

// Front-indexed range maximum: position 1 is the most recently prepended
// value. Prepends are stored as appends with p -> size() - p + 1.
class DiagonalMaxQueue {
 public:
  using value_type = std::int32_t;

  struct Hit {
    value_type value;
    std::size_t position;  // front position achieving `value`
  };

  DiagonalMaxQueue() = default;
  explicit DiagonalMaxQueue(std::size_t capacity) : heap_(capacity) {}

  void prepend(value_type x) { heap_.append(x); }

  std::size_t size() const noexcept { return heap_.size(); }

  // 1-based front position, unchecked.
  value_type at_front(std::size_t p) const noexcept { return heap_.value(size() - p + 1); }

  // Maximum over front positions a..b. Throws std::out_of_range unless
  // 1 <= a <= b <= size().
  Hit rmq_front(std::size_t a, std::size_t b) const {
    if (a < 1 || a > b || b > size()) {
      throw std::out_of_range("rmq_front(" + std::to_string(a) + ", " + std::to_string(b) + ") outside 1.." +
                              std::to_string(size()));
    }
    return rmq_front_unchecked(a, b);
  }

  Hit rmq_front_unchecked(std::size_t a, std::size_t b) const noexcept {
    const std::size_t n = size();
    const std::size_t pos = heap_.rmq_positions_unchecked(n - b + 1, n - a + 1);
    return {heap_.value(pos), n - pos + 1};
  }

  const TwoDMinHeap<value_type, std::greater<value_type>>& heap() const noexcept { return heap_; }

 private:
  TwoDMinHeap<value_type, std::greater<value_type>> heap_;
};

}  // namespace lcskp
