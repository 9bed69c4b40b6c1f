#ifndef SQPOW_GRAPH_IO_HPP
#define SQPOW_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "sqpow/json.hpp"

#include "sqpow/graph.hpp"

namespace sqpow {

/// Edge-list document:
///
///     # comment
///     vertex a
///     a b
///
/// Endpoints declare themselves on first use unless `strict` is set. Vertex
/// order is declaration order. Loops, duplicate edges, and malformed lines throw
/// GraphError with the offending line number.
Graph parse_graph(std::string_view text, bool strict = false);

/// JSON mirror: {"vertices": [...], "edges": [[u, v], ...]}.
Graph parse_graph_json(const Json& doc, bool strict = false);

/// Dispatches on the first non-blank character ('{' means JSON).
Graph parse_graph_any(std::string_view text, bool strict = false);

/// Only the graph's active vertices and edges are written.
std::string to_edge_list(const Graph& g);
Json to_json(const Graph& g);

}  // namespace sqpow

#endif  // SQPOW_GRAPH_IO_HPP
