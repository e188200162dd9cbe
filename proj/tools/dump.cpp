#include "dump.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <string>
#include <vector>

namespace lcskp::tools {

namespace {

void grid(std::ostream& out, const std::string& title, const std::vector<std::string>& row_labels,
          const std::vector<std::string>& col_labels, const std::function<std::string(std::size_t, std::size_t)>& cell) {
  std::size_t w = 2;
  for (const auto& s : row_labels) w = std::max(w, s.size() + 1);
  for (const auto& s : col_labels) w = std::max(w, s.size() + 1);
  for (std::size_t i = 0; i <= row_labels.size(); ++i)
    for (std::size_t j = 0; j <= col_labels.size(); ++j) w = std::max(w, cell(i, j).size() + 1);

  out << title << '\n' << std::setw(static_cast<int>(w)) << "" << std::setw(static_cast<int>(w)) << "";
  for (const auto& c : col_labels) out << std::setw(static_cast<int>(w)) << c;
  out << '\n';
  for (std::size_t i = 0; i <= row_labels.size(); ++i) {
    out << std::setw(static_cast<int>(w)) << (i == 0 ? "" : row_labels[i - 1]);
    for (std::size_t j = 0; j <= col_labels.size(); ++j) out << std::setw(static_cast<int>(w)) << cell(i, j);
    out << '\n';
  }
}

std::vector<std::string> labels(std::string_view s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

std::vector<std::string> labels(OpView s) {
  std::vector<std::string> out;
  for (OpValue v : s) out.push_back(std::to_string(v));
  return out;
}

}  // namespace

void dump_exact_tables(std::ostream& out, const DpTables& t, std::string_view x, std::string_view y) {
  const auto rows = labels(x), cols = labels(y);
  grid(out, "C", rows, cols, [&](std::size_t i, std::size_t j) { return std::to_string(t.C(i, j)); });
  grid(out, "L", rows, cols, [&](std::size_t i, std::size_t j) { return std::to_string(t.L(i, j)); });
  grid(out, "M", rows, cols, [&](std::size_t i, std::size_t j) {
    return t.M(i, j) == no_chunk ? std::string("-") : std::to_string(t.M(i, j));
  });
}

void dump_op_tables(std::ostream& out, const OpDpState& st, OpView x, OpView y) {
  const auto rows = labels(x), cols = labels(y);
  grid(out, "C", rows, cols, [&](std::size_t i, std::size_t j) { return std::to_string(st.C(i, j)); });
  const bool have_lce = st.oplce.rows() == st.m && st.oplce.cols() == st.n && st.m > 0 && st.n > 0;
  grid(out, "S", rows, cols, [&](std::size_t i, std::size_t j) -> std::string {
    if (i == 0 || j == 0) return "0";
    if (!have_lce) return "?";
    return std::to_string(st.oplce(st.m - i + 1, st.n - j + 1));
  });
}

}  // namespace lcskp::tools
