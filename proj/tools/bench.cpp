#include "bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "lcskp/lcs_kplus.hpp"
#include "lcskp/op_lcs_kplus.hpp"

namespace lcskp::tools {

namespace {

template <typename Int>
Int parse_number(const std::string& s) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

template <typename Int>
std::vector<Int> parse_list(const std::string& list) {
  if (list.empty()) throw std::invalid_argument("empty list");
  std::vector<Int> out;
  if (list.find(':') != std::string::npos) {
    const auto parts = split(list, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be lo:hi:step, got '" + list + "'");
    const Int lo = parse_number<Int>(parts[0]), hi = parse_number<Int>(parts[1]), step = parse_number<Int>(parts[2]);
    if (step <= 0 || lo > hi) throw std::invalid_argument("bad range '" + list + "'");
    for (Int v = lo; v <= hi; v += step) out.push_back(v);
  } else {
    for (const auto& p : split(list, ',')) out.push_back(parse_number<Int>(p));
  }
  return out;
}

std::mt19937_64 bench_rng(std::uint64_t seed, std::size_t n, int which) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(which)};
  return std::mt19937_64(seq);
}

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "op"; }

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& list) { return parse_list<std::size_t>(list); }

std::vector<int> parse_int_list(const std::string& list) { return parse_list<int>(list); }

std::string bench_symbols(std::uint64_t seed, std::size_t n, int sigma, int which) {
  auto rng = bench_rng(seed, n, which);
  std::uniform_int_distribution<int> dist(0, sigma - 1);
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + dist(rng));
  return s;
}

OpSequence bench_values(std::uint64_t seed, std::size_t n, int sigma, int which) {
  auto rng = bench_rng(seed, n, which);
  std::uniform_int_distribution<OpValue> dist(1, sigma);
  OpSequence s(n);
  for (auto& v : s) v = dist(rng);
  return s;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.n_list.empty() || cfg.k_list.empty()) throw std::invalid_argument("n and k lists must be non-empty");
  if (cfg.repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  if (cfg.mode == Mode::exact && (cfg.sigma < 1 || cfg.sigma > 26)) {
    throw std::invalid_argument("exact mode sigma must be in [1, 26]");
  }
  if (cfg.mode == Mode::order_isomorphic && cfg.sigma < 1) throw std::invalid_argument("op mode sigma must be >= 1");
  for (int k : cfg.k_list) require_valid(Params{k, cfg.mode});

  std::vector<BenchRow> rows;
  for (std::size_t n : cfg.n_list) {
    std::string sx, sy;
    OpSequence vx, vy;
    if (cfg.mode == Mode::exact) {
      sx = bench_symbols(cfg.seed, n, cfg.sigma, 0);
      sy = bench_symbols(cfg.seed, n, cfg.sigma, 1);
    } else {
      vx = bench_values(cfg.seed, n, cfg.sigma, 0);
      vy = bench_values(cfg.seed, n, cfg.sigma, 1);
    }
    for (int k : cfg.k_list) {
      std::vector<double> times;
      std::int64_t length = 0;
      for (int r = 0; r < cfg.repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        length = cfg.mode == Mode::exact ? lcs_kplus_length(sx, sy, k) : op_lcs_kplus_length(vx, vy, k);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      std::sort(times.begin(), times.end());
      rows.push_back({cfg.mode, n, k, cfg.sigma, times[times.size() / 2], length});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "mode,n,k,sigma,seconds,length\n";
  char buf[32];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    out << mode_name(r.mode) << ',' << r.n << ',' << r.k << ',' << r.sigma << ',' << buf << ',' << r.length << '\n';
  }
}

}  // namespace lcskp::tools
