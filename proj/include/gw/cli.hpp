#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gw/partitions.hpp"

namespace gw::cli {

enum class OutputFormat { Table, Json, Csv };

// Renders solution lists deterministically: json is an array of records,
// csv one data row per pair, table a Markdown table grouped by length.
std::string format_solutions(const std::vector<SearchEntry>& entries, OutputFormat format);

// Dispatches argv (without the program name) to the library. Returns 0 on
// success, 1 on domain errors, 2 on usage errors, 3 when a verdict came back
// Unknown or a budget ran out. Normal output goes to out, diagnostics to
// err; output is buffered and emitted once.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gw::cli
