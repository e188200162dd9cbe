#include "input.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lcskp::tools {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("error while reading " + path);
  return buf.str();
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string read_symbols(const std::string& path) {
  std::string s = slurp(path);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

OpSequence parse_values(const std::string& text, const std::string& origin) {
  OpSequence out;
  std::size_t line = 1, line_start = 0, p = 0;
  while (p < text.size()) {
    if (is_separator(text[p])) {
      if (text[p] == '\n') {
        ++line;
        line_start = p + 1;
      }
      ++p;
      continue;
    }
    std::size_t end = p;
    while (end < text.size() && !is_separator(text[end])) ++end;
    const char* first = text.data() + p;
    const char* last = text.data() + end;
    if (*first == '+') ++first;  // from_chars does not take a leading plus
    OpValue v{};
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(p - line_start + 1) +
                       ": invalid integer '" + text.substr(p, end - p) + "'");
    }
    out.push_back(v);
    p = end;
  }
  return out;
}

OpSequence read_values(const std::string& path) { return parse_values(slurp(path), path); }

}  // namespace lcskp::tools
