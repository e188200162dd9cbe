#pragma once

#include <ostream>
#include <string_view>

#include "lcskp/lcs_kplus.hpp"
#include "lcskp/op_lcs_kplus.hpp"

namespace lcskp::tools {

// Largest input length accepted by --dump-tables.
inline constexpr std::size_t max_dump_length = 64;

// C, L and M as labelled grids; rows follow X, columns follow Y, with the
// empty prefix in row/column 0. Undefined M entries print as "-".
void dump_exact_tables(std::ostream& out, const DpTables& t, std::string_view x, std::string_view y);

// C plus the longest order-isomorphic common suffix length of each prefix pair.
void dump_op_tables(std::ostream& out, const OpDpState& st, OpView x, OpView y);

}  // namespace lcskp::tools
