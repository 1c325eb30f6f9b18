#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgreen/graph.hpp"
#include "mgreen/linalg.hpp"

namespace mgreen {

struct GraphFile {
  MetrizedGraph graph;
  Divisor divisor;
};

/// Reads the JSON graph format
///   {"vertices": [...], "edges": [{"from": i, "to": j, "length": "p/q"}, ...], "divisor": [...]}
/// Lengths may be "p/q" strings or bare integers; "divisor" defaults to zero.
/// Errors carry the offending field path and its line in `text`.
GraphFile parse_graph(std::string_view text);

GraphFile read_graph_file(const std::string& path);

/// Inverse of parse_graph (pretty-printed).
std::string serialize_graph(const MetrizedGraph& g, const Divisor& d);

/// "i:p/q" → GraphPoint.
GraphPoint parse_point(std::string_view text);

/// "a0,a1,..." → Divisor.
Divisor parse_divisor(std::string_view text);

/// One line of "i:p/q j:p/q" per point pair; blank lines and '#' comments skipped.
std::vector<std::pair<GraphPoint, GraphPoint>> parse_point_pairs(std::string_view text);

std::string format_point(const GraphPoint& x);

/// Row per line, entries separated by single spaces.
std::string format_matrix(const RationalMatrix& m);

}  // namespace mgreen
