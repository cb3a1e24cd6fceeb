#pragma once

#include <string>
#include <string_view>

#include "odcode/errors.hpp"
#include "odcode/graph.hpp"

namespace odcode {

// Text format: header "n m", then m lines "u v" with u < v. Lines starting
// with '#' are comments; "#role <v> <label>" comments carry vertex labels.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

// {"n": .., "edges": [[u, v], ..], "labels": {"0": "..."}}
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

// Dispatches on the first non-blank character ('{' selects JSON).
Graph parse_graph(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
Graph load_graph(const std::string& path);

}  // namespace odcode
