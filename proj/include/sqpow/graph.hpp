#ifndef SQPOW_GRAPH_HPP
#define SQPOW_GRAPH_HPP

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqpow/vertex_set.hpp"

namespace sqpow {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr VertexSet support() const { return VertexSet::single(u) | VertexSet::single(v); }
  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Names of the vertices of a graph, shared by all its induced subgraphs so that
/// vertex indices (and monomial supports) stay comparable across operations.
using VertexNames = std::shared_ptr<const std::vector<std::string>>;

/// Finite simple graph on a subset of a named vertex universe.
///
/// Vertices are dense indices in declaration order. Removing vertices keeps the
/// universe and only shrinks the active vertex set, so subgraphs of G share G's
/// indices. Immutable after construction.
class Graph {
 public:
  Graph();

  /// Builds a graph whose vertex set is the whole universe `names`.
  /// Throws GraphError on loops, duplicate edges, or out-of-range endpoints.
  Graph(std::vector<std::string> names, const std::vector<std::pair<Vertex, Vertex>>& edges);

  /// Convenience for tests and the corpus: vertices declared by name, edges by name pairs.
  static Graph from_names(const std::vector<std::string>& names,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  const VertexNames& names() const { return names_; }
  int universe_size() const { return static_cast<int>(names_->size()); }
  VertexSet vertices() const { return vertices_; }
  int num_vertices() const { return vertices_.size(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// Edges sorted lexicographically by (u, v); positions are the edge indices.
  std::span<const Edge> edges() const { return edges_; }

  const std::string& name(Vertex v) const { return (*names_)[static_cast<std::size_t>(v)]; }
  std::optional<Vertex> find(const std::string& name) const;
  /// Like find(), but throws GraphError for unknown or inactive names.
  Vertex at(const std::string& name) const;

  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)] | VertexSet::single(v); }
  int degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a)].contains(b); }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  /// Number of edges with both endpoints in s.
  int edges_within(VertexSet s) const;

  /// G - U: the induced subgraph on V(G) \ U. Throws GraphError when U is not a
  /// subset of V(G).
  Graph remove_vertices(VertexSet u) const;
  /// Induced subgraph on s (s must be a subset of V(G)).
  Graph induced(VertexSet s) const;

  bool operator==(const Graph& o) const;

 private:
  Graph(VertexNames names, VertexSet vertices, std::vector<VertexSet> adj, std::vector<Edge> edges);

  VertexNames names_;
  VertexSet vertices_;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff g has no cycle.
bool is_forest(const Graph& g);

/// Degree-one vertices in index order.
std::vector<Vertex> leaves(const Graph& g);

struct DistantLeaf {
  Vertex leaf;
  Vertex support;
  bool operator==(const DistantLeaf&) const = default;
};

/// All (x, y) with x a leaf, y its neighbor, and y having at most one neighbor
/// of degree > 1. Ordered by leaf index.
std::vector<DistantLeaf> distant_leaves(const Graph& g);

/// Exhaustive search memoized on the set of uncovered vertices.
bool has_perfect_matching(const Graph& g);

}  // namespace sqpow

#endif  // SQPOW_GRAPH_HPP
