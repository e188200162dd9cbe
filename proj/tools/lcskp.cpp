// lcskp: LCS in at-least-k-length substrings, exact and order-isomorphic.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bench.hpp"
#include "dump.hpp"
#include "input.hpp"
#include "lcskp/alignment.hpp"
#include "lcskp/lcs_kplus.hpp"
#include "lcskp/op_lcs_kplus.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_usage = 2;

struct PairOptions {
  std::string file_x, file_y;
  int k = 0;
  bool chunks = false;
  bool low_mem = false;
  bool dump_tables = false;
  bool quiet = false;
  std::string out;
};

struct BenchOptions {
  std::string mode = "exact";
  std::string n_list = "1000:4000:1000";
  std::string k_list = "2";
  int sigma = 4;
  std::uint64_t seed = 1;
  int repeat = 1;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Owns the --out stream when one is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw lcskp::tools::InputError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw lcskp::tools::InputError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_pair_options(CLI::App* cmd, PairOptions& o, bool with_low_mem) {
  cmd->add_option("file_x", o.file_x, "first sequence file")->required();
  cmd->add_option("file_y", o.file_y, "second sequence file")->required();
  cmd->add_option("--k", o.k, "minimum chunk length")->required();
  cmd->add_flag("--chunks", o.chunks, "also print the chunk alignment as JSON");
  if (with_low_mem) cmd->add_flag("--low-mem", o.low_mem, "length only, keeping k+1 rows of the table");
  cmd->add_flag("--dump-tables", o.dump_tables, "print the DP tables (inputs of length <= 64)");
  cmd->add_flag("--quiet", o.quiet, "print the bare length only");
  cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

void check_dump_size(const PairOptions& o, std::size_t m, std::size_t n) {
  if (o.dump_tables && (m > lcskp::tools::max_dump_length || n > lcskp::tools::max_dump_length)) {
    throw UsageError("--dump-tables needs inputs of length <= " + std::to_string(lcskp::tools::max_dump_length));
  }
}

void check_k(const PairOptions& o, lcskp::Mode mode) {
  if (o.k < lcskp::min_k(mode)) {
    throw UsageError(mode == lcskp::Mode::exact ? "exact mode requires k >= 1" : "op mode requires k >= 2");
  }
}

int run_exact(const PairOptions& o) {
  check_k(o, lcskp::Mode::exact);
  if (o.low_mem && (o.chunks || o.dump_tables)) throw UsageError("--low-mem cannot be combined with --chunks or --dump-tables");
  const std::string x = lcskp::tools::read_symbols(o.file_x);
  const std::string y = lcskp::tools::read_symbols(o.file_y);
  check_dump_size(o, x.size(), y.size());

  Output out(o.out);
  auto& os = out.stream();
  if (o.low_mem) {
    os << lcskp::lcs_kplus_length(x, y, o.k) << '\n';
  } else {
    const auto t = lcskp::compute_tables(x, y, o.k);
    if (o.dump_tables && !o.quiet) lcskp::tools::dump_exact_tables(os, t, x, y);
    os << t.C(x.size(), y.size()) << '\n';
    if (o.chunks && !o.quiet) os << lcskp::to_json(lcskp::traceback(t, x, y, o.k)) << '\n';
  }
  out.finish();
  return exit_ok;
}

int run_op(const PairOptions& o) {
  check_k(o, lcskp::Mode::order_isomorphic);
  const auto x = lcskp::tools::read_values(o.file_x);
  const auto y = lcskp::tools::read_values(o.file_y);
  check_dump_size(o, x.size(), y.size());

  Output out(o.out);
  auto& os = out.stream();
  if (o.chunks || o.dump_tables) {
    const auto st = lcskp::solve_op_lcs_kplus(x, y, o.k);
    if (o.dump_tables && !o.quiet) lcskp::tools::dump_op_tables(os, st, x, y);
    os << st.length << '\n';
    if (o.chunks && !o.quiet) os << lcskp::to_json(lcskp::op_traceback(st, x, y, o.k)) << '\n';
  } else {
    os << lcskp::op_lcs_kplus_length(x, y, o.k) << '\n';
  }
  out.finish();
  return exit_ok;
}

int run_bench(const BenchOptions& o) {
  lcskp::tools::BenchConfig cfg;
  if (o.mode == "exact") {
    cfg.mode = lcskp::Mode::exact;
  } else if (o.mode == "op") {
    cfg.mode = lcskp::Mode::order_isomorphic;
  } else {
    throw UsageError("--mode must be exact or op");
  }
  try {
    cfg.n_list = lcskp::tools::parse_size_list(o.n_list);
    cfg.k_list = lcskp::tools::parse_int_list(o.k_list);
    cfg.sigma = o.sigma;
    cfg.seed = o.seed;
    cfg.repeat = o.repeat;
    Output out(o.out);
    lcskp::tools::write_csv(out.stream(), lcskp::tools::run_bench(cfg));
    out.finish();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCS in at-least-k-length substrings"};
  app.require_subcommand(1);

  PairOptions exact_opts, op_opts;
  BenchOptions bench_opts;

  auto* exact = app.add_subcommand("exact", "symbol sequences, one per file as raw bytes");
  add_pair_options(exact, exact_opts, true);

  auto* op = app.add_subcommand("op", "order-isomorphic mode on integer sequences");
  add_pair_options(op, op_opts, false);

  auto* bench = app.add_subcommand("bench", "time random instances and print CSV");
  bench->add_option("--mode", bench_opts.mode, "exact or op")->capture_default_str();
  bench->add_option("--n", bench_opts.n_list, "lengths: a,b,c or lo:hi:step")->capture_default_str();
  bench->add_option("--k", bench_opts.k_list, "k values: a,b,c or lo:hi:step")->capture_default_str();
  bench->add_option("--sigma", bench_opts.sigma, "alphabet size (exact) or value range (op)")->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "RNG seed")->capture_default_str();
  bench->add_option("--repeat", bench_opts.repeat, "runs per cell; the median is reported")->capture_default_str();
  bench->add_option("--out", bench_opts.out, "write CSV to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*exact) return run_exact(exact_opts);
    if (*op) return run_op(op_opts);
    return run_bench(bench_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const lcskp::tools::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
