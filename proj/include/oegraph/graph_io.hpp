#pragma once

#include <iosfwd>
#include <string>

#include "oegraph/graph.hpp"

namespace oegraph {

// Line-oriented text format. Each non-blank line is one of
//   # comment
//   v <vertex>
//   e <edge> <src> <dst>
// with single spaces between fields. Identifiers use letters, digits,
// '_', '-' and '.'. Parse errors carry 1-based line numbers.
Graph parse_graph(std::istream& in, const std::string& origin = "<input>");
Graph parse_graph_text(const std::string& text, const std::string& origin = "<input>");
Graph load_graph(const std::string& path);

// Deterministic output: vertices then edges, each sorted by name.
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace oegraph
