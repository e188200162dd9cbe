#pragma once

#include <stdexcept>
#include <string>

#include "lcskp/sequence.hpp"

namespace lcskp::tools {

// Unreadable file or malformed contents; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw bytes with trailing '\n' / '\r' removed.
std::string read_symbols(const std::string& path);

// Signed integers separated by commas and/or whitespace.
OpSequence parse_values(const std::string& text, const std::string& origin);
OpSequence read_values(const std::string& path);

}  // namespace lcskp::tools
