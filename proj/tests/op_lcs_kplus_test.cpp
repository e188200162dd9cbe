#include <gtest/gtest.h>

#include <algorithm>

#include "lcskp/op_lcs_kplus.hpp"
#include "lcskp/oracles.hpp"
#include "test_util.hpp"

namespace lcskp {
namespace {

using testing::Rng;
using testing::uniform;

const OpSequence ex_x{14, 84, 82, 31, 74, 68, 87, 11, 20, 32};
const OpSequence ex_y{21, 64, 2, 83, 73, 51, 5, 29, 7, 71};

TEST(OpLcsKplus, WorkedExample) {
  EXPECT_EQ(op_lcs_kplus_length(ex_x, ex_y, 3), 7);
  EXPECT_EQ(solve_op_lcs_kplus(ex_x, ex_y, 3).length, 7);
}

TEST(OpLcsKplus, WorkedExampleTraceback) {
  const auto st = solve_op_lcs_kplus(ex_x, ex_y, 3);
  const auto a = op_traceback(st, ex_x, ex_y, 3);
  EXPECT_EQ(a.total, 7u);
  EXPECT_TRUE(validate_alignment<OpValue>(ex_x, ex_y, {3, Mode::order_isomorphic}, a));
}

TEST(OpLcsKplus, DistinctIdenticalInputsFormOneChunk) {
  const OpSequence x{5, 1, 9, 3, 7, 2, 8};
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(op_lcs_kplus_length(x, x, k), 7);
}

TEST(OpLcsKplus, ShorterThanK) {
  const OpSequence x{1, 2, 3}, y{4, 5, 6, 7, 8};
  EXPECT_EQ(op_lcs_kplus_length(x, y, 4), 0);
  EXPECT_EQ(op_lcs_kplus_length(y, x, 4), 0);
  EXPECT_EQ(op_lcs_kplus_length({}, {}, 2), 0);
  const auto st = solve_op_lcs_kplus(x, y, 4);
  EXPECT_TRUE(op_traceback(st, x, y, 4).chunks.empty());
}

TEST(OpLcsKplus, RejectsKBelowTwo) {
  EXPECT_THROW(op_lcs_kplus_length(ex_x, ex_y, 1), std::invalid_argument);
  EXPECT_THROW(solve_op_lcs_kplus(ex_x, ex_y, 0), std::invalid_argument);
  EXPECT_THROW(oracle::naive_op_lcs_kplus(ex_x, ex_y, 1), std::invalid_argument);
}

TEST(OpLcsKplus, TracebackRejectsForeignState) {
  const auto st = solve_op_lcs_kplus(ex_x, ex_y, 3);
  EXPECT_THROW(op_traceback(st, ex_x, ex_y, 2), std::invalid_argument);
  EXPECT_THROW(op_traceback(st, ex_y, OpSequence(ex_x.begin(), ex_x.end() - 1), 3), std::invalid_argument);
}

// A ~ B, yet appending one value breaks the match at full length while a
// shorter common suffix survives. An exact-mode style "extend the previous
// suffix by one" update would get these wrong.
TEST(OpLcsKplus, SuffixesSurviveABrokenExtension) {
  const OpSequence a{32, 40, 4, 16, 27}, b{28, 32, 12, 20, 25};
  OpSequence a1 = a, b1 = b, a2 = a, b2 = b;
  a1.push_back(41);
  b1.push_back(26);
  a2.push_back(15);
  b2.push_back(22);

  ASSERT_TRUE(order_isomorphic(a, b));
  ASSERT_FALSE(order_isomorphic(a1, b1));
  ASSERT_TRUE(order_isomorphic(OpView(a1).subspan(2), OpView(b1).subspan(2)));
  ASSERT_FALSE(order_isomorphic(a2, b2));
  ASSERT_TRUE(order_isomorphic(OpView(a2).subspan(4), OpView(b2).subspan(4)));

  // Longest order-isomorphic common suffix of the full strings.
  const OpSequence ra1(a1.rbegin(), a1.rend()), rb1(b1.rbegin(), b1.rend());
  EXPECT_EQ(build_oplce_table(ra1, rb1)(1, 1), 4u);
  const OpSequence ra2(a2.rbegin(), a2.rend()), rb2(b2.rbegin(), b2.rend());
  EXPECT_EQ(build_oplce_table(ra2, rb2)(1, 1), 2u);

  // (32,40)|(4,16,27,41) and (32,40,4)|(16,27,41) give 6; for k = 4 only
  // the five-long prefix chunk fits.
  EXPECT_EQ(op_lcs_kplus_length(a1, b1, 2), 6);
  EXPECT_EQ(op_lcs_kplus_length(a1, b1, 3), 6);
  EXPECT_EQ(op_lcs_kplus_length(a1, b1, 4), 5);
  for (int k = 2; k <= 6; ++k) {
    EXPECT_EQ(op_lcs_kplus_length(a1, b1, k), oracle::naive_op_lcs_kplus(a1, b1, k));
    EXPECT_EQ(op_lcs_kplus_length(a2, b2, k), oracle::naive_op_lcs_kplus(a2, b2, k));
  }
}

TEST(OpLcsKplus, AgreesWithNaiveRecurrence) {
  Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const OpValue range = std::array<OpValue, 3>{3, 10, 1000}[round % 3];
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 0, 40), range);
    y.resize(uniform(rng, 0, y.size()));
    const int k = static_cast<int>(uniform(rng, 2, 6));
    ASSERT_EQ(op_lcs_kplus_length(x, y, k), oracle::naive_op_lcs_kplus(x, y, k)) << "round " << round;
  }
}

TEST(OpLcsKplus, RetainedAndRollingAgree) {
  Rng rng(42);
  for (int round = 0; round < 100; ++round) {
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 0, 60), 20);
    const int k = static_cast<int>(uniform(rng, 2, 5));
    ASSERT_EQ(op_lcs_kplus_length(x, y, k), solve_op_lcs_kplus(x, y, k).length);
  }
}

TEST(OpLcsKplus, TableMonotoneAndNonIncreasingInK) {
  Rng rng(43);
  for (int round = 0; round < 60; ++round) {
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 2, 40), 8);
    Cell previous = op_lcs_kplus_length(x, y, 2);
    for (int k = 2; k <= 6; ++k) {
      const auto st = solve_op_lcs_kplus(x, y, k);
      for (std::size_t i = 0; i <= st.m; ++i) {
        for (std::size_t j = 0; j <= st.n; ++j) {
          if (i > 0) ASSERT_GE(st.C(i, j), st.C(i - 1, j));
          if (j > 0) ASSERT_GE(st.C(i, j), st.C(i, j - 1));
        }
      }
      ASSERT_LE(st.length, previous);
      previous = st.length;
    }
  }
}

TEST(OpLcsKplus, DiagonalQueuesHoldOffsetValues) {
  Rng rng(44);
  for (int round = 0; round < 40; ++round) {
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 3, 30), 10);
    const int k = static_cast<int>(uniform(rng, 2, 3));
    const auto st = solve_op_lcs_kplus(x, y, k);
    if (st.length == 0 && (st.m < 2 || st.n < 2)) continue;
    for (std::size_t i = 0; i <= st.m; ++i) {
      for (std::size_t j = 0; j <= st.n; ++j) {
        const auto d = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
        if (!st.has_diagonal(d)) continue;
        const auto& q = st.diagonal(d);
        // Cell (i, j) was element min(i, j) + 1 of its diagonal.
        const std::size_t mn = std::min(i, j);
        ASSERT_EQ(q.at_front(q.size() - mn), st.C(i, j) - static_cast<Cell>(mn));
      }
    }
  }
}

TEST(OpLcsKplus, OffsetPreservesArgmax) {
  Rng rng(45);
  for (int round = 0; round < 30; ++round) {
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 5, 30), 10);
    const auto st = solve_op_lcs_kplus(x, y, 2);
    for (std::size_t i = 2; i <= st.m; ++i) {
      for (std::size_t j = 2; j <= st.n; ++j) {
        const std::size_t mn = std::min(i, j);
        for (std::size_t lo = 1; lo <= mn; ++lo) {
          for (std::size_t hi = lo; hi <= mn; ++hi) {
            Cell best_a = -1, best_b = -1000000;
            std::size_t arg_a = 0, arg_b = 0;
            for (std::size_t l = lo; l <= hi; ++l) {
              const Cell a = st.C(i - l, j - l) + static_cast<Cell>(l);
              const Cell b = st.C(i - l, j - l) - static_cast<Cell>(mn) + static_cast<Cell>(l);
              if (a > best_a) best_a = a, arg_a = l;
              if (b > best_b) best_b = b, arg_b = l;
            }
            ASSERT_EQ(arg_a, arg_b);
            ASSERT_EQ(best_a, best_b + static_cast<Cell>(mn));
          }
        }
      }
    }
  }
}

TEST(OpTraceback, AlwaysValidWithReportedTotal) {
  Rng rng(46);
  for (int round = 0; round < 200; ++round) {
    const OpValue range = round % 2 ? 4 : 500;
    auto [x, y] = testing::planted_pair(rng, uniform(rng, 0, 48), range);
    const int k = static_cast<int>(uniform(rng, 2, 6));
    const auto st = solve_op_lcs_kplus(x, y, k);
    const auto a = op_traceback(st, x, y, k);
    ASSERT_TRUE(validate_alignment<OpValue>(x, y, {k, Mode::order_isomorphic}, a)) << "round " << round;
    ASSERT_EQ(a.total, static_cast<std::size_t>(st.length));
  }
}

}  // namespace
}  // namespace lcskp
