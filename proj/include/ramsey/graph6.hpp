#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Standard graph6 (no ">>graph6<<" header, no trailing newline).
std::string encode_graph6(const Graph& g);
// Accepts an optional trailing newline / carriage return.
Graph decode_graph6(std::string_view line);

// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace ramsey
