// Text format for decision tables (.dtab): directive lines `table`, `k`,
// `attrs`, then one `row` line per row. `#` starts a comment.
#pragma once

#include <string>

#include "dectab/io_error.hpp"
#include "dectab/table.hpp"

namespace dectab {

// `filename` only decorates error messages.
DecisionTable parse_dtab(const std::string& text, const std::string& filename = "");

DecisionTable load_dtab(const std::string& path);

// Deterministic: single spaces, rows in source order, sorted decisions,
// trailing newline. parse(print(T)) reproduces T exactly.
std::string print_dtab(const DecisionTable& table);

void save_dtab(const DecisionTable& table, const std::string& path);

}  // namespace dectab
