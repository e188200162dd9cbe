#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lcskp/sequence.hpp"

namespace lcskp::tools {

struct BenchConfig {
  Mode mode = Mode::exact;
  std::vector<std::size_t> n_list;
  std::vector<int> k_list;
  // Alphabet size in exact mode, number of distinct values in op mode.
  int sigma = 4;
  std::uint64_t seed = 1;
  int repeat = 1;
};

struct BenchRow {
  Mode mode;
  std::size_t n;
  int k;
  int sigma;
  double seconds;  // median over repeats
  std::int64_t length;
};

// "1000,2000,3000" or "lo:hi:step" (inclusive). Throws std::invalid_argument.
std::vector<std::size_t> parse_size_list(const std::string& list);
std::vector<int> parse_int_list(const std::string& list);

// Inputs depend only on (seed, n), so every k in a row group compares the same pair.
std::string bench_symbols(std::uint64_t seed, std::size_t n, int sigma, int which);
OpSequence bench_values(std::uint64_t seed, std::size_t n, int sigma, int which);

std::vector<BenchRow> run_bench(const BenchConfig& cfg);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace lcskp::tools
