#include "lcskp/rmq.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>

namespace lcskp {

namespace {

constexpr std::size_t max_block = 16;
constexpr std::size_t min_capacity = 16;

std::size_t block_for(std::size_t capacity) {
  return std::clamp<std::size_t>(std::bit_width(capacity) / 2, 1, max_block);
}

}  // namespace

// answer[(mask * B + lo) * B + hi]: offset of the rightmost minimum of the
// block shape `mask` over [lo, hi]. Bit t of mask is set when step t -> t+1 rises.
struct PlusMinusOneRmq::InBlockTable {
  std::size_t block = 1;
  std::vector<std::uint8_t> answer;

  explicit InBlockTable(std::size_t b) : block(b), answer((std::size_t{1} << (b - 1)) * b * b, 0) {
    std::vector<int> depth(b);
    for (std::size_t mask = 0; mask < (std::size_t{1} << (b - 1)); ++mask) {
      depth[0] = 0;
      for (std::size_t t = 1; t < b; ++t) depth[t] = depth[t - 1] + ((mask >> (t - 1)) & 1 ? 1 : -1);
      for (std::size_t lo = 0; lo < b; ++lo) {
        std::size_t best = lo;
        for (std::size_t hi = lo; hi < b; ++hi) {
          if (depth[hi] <= depth[best]) best = hi;
          answer[(mask * b + lo) * b + hi] = static_cast<std::uint8_t>(best);
        }
      }
    }
  }
};

const PlusMinusOneRmq::InBlockTable& PlusMinusOneRmq::table_for(std::size_t block) {
  static std::array<std::once_flag, max_block + 1> once;
  static std::array<std::unique_ptr<InBlockTable>, max_block + 1> tables;
  std::call_once(once[block], [block] { tables[block] = std::make_unique<InBlockTable>(block); });
  return *tables[block];
}

PlusMinusOneRmq::PlusMinusOneRmq(std::size_t capacity) { rebuild(std::max(capacity, min_capacity)); }

void PlusMinusOneRmq::rebuild(std::size_t capacity) {
  capacity_ = capacity;
  block_ = block_for(capacity);
  table_ = &table_for(block_);
  masks_.clear();
  masks_.reserve(capacity / block_ + 1);
  const std::size_t blocks = capacity / block_;
  sparse_.assign(std::bit_width(std::max<std::size_t>(blocks, 1)), {});
  for (std::size_t lv = 0; lv < sparse_.size(); ++lv) {
    const std::size_t span = std::size_t{1} << lv;
    sparse_[lv].reserve(blocks >= span ? blocks - span + 1 : 0);
  }
  const std::size_t n = depth_.size();
  std::vector<std::int32_t> keep;
  keep.swap(depth_);
  depth_.reserve(capacity);
  for (std::size_t p = 0; p < n; ++p) {
    depth_.push_back(keep[p]);
    index_last();
  }
}

void PlusMinusOneRmq::push_back(std::int32_t depth) {
  if (!depth_.empty() && depth != depth_.back() + 1 && depth != depth_.back() - 1) {
    throw std::invalid_argument("PlusMinusOneRmq: consecutive depths must differ by exactly 1");
  }
  if (depth_.size() == capacity_) rebuild(2 * capacity_);
  depth_.push_back(depth);
  index_last();
}

void PlusMinusOneRmq::index_last() {
  const std::size_t p = depth_.size() - 1;
  const std::size_t q = p / block_, off = p % block_;
  if (off == 0) {
    masks_.push_back(0);
  } else if (depth_[p] > depth_[p - 1]) {
    masks_[q] = static_cast<std::uint16_t>(masks_[q] | (1u << (off - 1)));
  }
  if (off + 1 == block_) close_block(q);
}

void PlusMinusOneRmq::close_block(std::size_t q) {
  if (sparse_.size() < std::bit_width(q + 1)) sparse_.resize(std::bit_width(q + 1));
  sparse_[0].push_back(static_cast<std::uint32_t>(in_block(q, 0, block_ - 1)));
  for (std::size_t lv = 1; lv < sparse_.size() && (std::size_t{1} << lv) <= q + 1; ++lv) {
    const std::size_t half = std::size_t{1} << (lv - 1);
    sparse_[lv].push_back(static_cast<std::uint32_t>(pick(sparse(lv - 1, q - half), sparse(lv - 1, q))));
  }
}

std::size_t PlusMinusOneRmq::in_block(std::size_t q, std::size_t lo, std::size_t hi) const noexcept {
  return q * block_ + table_->answer[(masks_[q] * block_ + lo) * block_ + hi];
}

std::size_t PlusMinusOneRmq::argmin(std::size_t a, std::size_t b) const {
  if (a > b || b >= depth_.size()) {
    throw std::out_of_range("argmin(" + std::to_string(a) + ", " + std::to_string(b) + ") outside 0.." +
                            std::to_string(depth_.size()) + ")");
  }
  return argmin_unchecked(a, b);
}

std::size_t PlusMinusOneRmq::argmin_unchecked(std::size_t a, std::size_t b) const noexcept {
  const std::size_t qa = a / block_, qb = b / block_;
  if (qa == qb) return in_block(qa, a % block_, b % block_);
  std::size_t best = in_block(qa, a % block_, block_ - 1);
  if (qb - qa > 1) {
    const std::size_t first = qa + 1, last = qb - 1;
    const std::size_t lv = std::bit_width(last - first + 1) - 1;
    best = pick(best, sparse(lv, first + (std::size_t{1} << lv) - 1));
    best = pick(best, sparse(lv, last));
  }
  return pick(best, in_block(qb, 0, b % block_));
}

}  // namespace lcskp
