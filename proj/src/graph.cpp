#include "sqpow/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace sqpow {

Graph::Graph() : names_(std::make_shared<const std::vector<std::string>>()) {}

Graph::Graph(VertexNames names, VertexSet vertices, std::vector<VertexSet> adj, std::vector<Edge> edges)
    : names_(std::move(names)), vertices_(vertices), adj_(std::move(adj)), edges_(std::move(edges)) {}

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw GraphError("graph has " + std::to_string(names.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  const int n = static_cast<int>(names.size());
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  vertices_ = VertexSet::range(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("loop at vertex '" + (*names_)[static_cast<std::size_t>(a)] + "'");
    if (adj_[static_cast<std::size_t>(a)].contains(b)) {
      throw GraphError("duplicate edge " + (*names_)[static_cast<std::size_t>(a)] + " " +
                       (*names_)[static_cast<std::size_t>(b)]);
    }
    adj_[static_cast<std::size_t>(a)].insert(b);
    adj_[static_cast<std::size_t>(b)].insert(a);
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_names(const std::vector<std::string>& names,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw GraphError("undeclared vertex '" + s + "'");
    return static_cast<Vertex>(it - names.begin());
  };
  std::vector<std::pair<Vertex, Vertex>> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) idx.emplace_back(index(a), index(b));
  return Graph(names, idx);
}

std::optional<Vertex> Graph::find(const std::string& name) const {
  for (Vertex v : vertices_) {
    if ((*names_)[static_cast<std::size_t>(v)] == name) return v;
  }
  return std::nullopt;
}

Vertex Graph::at(const std::string& name) const {
  auto v = find(name);
  if (!v) throw GraphError("unknown vertex '" + name + "'");
  return *v;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (Vertex v : s) twice += (adj_[static_cast<std::size_t>(v)] & s).size();
  return twice / 2;
}

Graph Graph::remove_vertices(VertexSet u) const {
  if (!u.subset_of(vertices_)) throw GraphError("remove_vertices: set contains a vertex not in the graph");
  return induced(vertices_ - u);
}

Graph Graph::induced(VertexSet s) const {
  if (!s.subset_of(vertices_)) throw GraphError("induced: set contains a vertex not in the graph");
  std::vector<VertexSet> adj(adj_.size());
  for (Vertex v : s) adj[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & s;
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (s.contains(e.u) && s.contains(e.v)) edges.push_back(e);
  }
  return Graph(names_, s, std::move(adj), std::move(edges));
}

bool Graph::operator==(const Graph& o) const {
  return (names_ == o.names_ || *names_ == *o.names_) && vertices_ == o.vertices_ && edges_ == o.edges_;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.num_edges() == g.num_vertices() - static_cast<int>(comps.size());
}

std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<DistantLeaf> distant_leaves(const Graph& g) {
  std::vector<DistantLeaf> out;
  for (Vertex x : leaves(g)) {
    Vertex y = g.neighbors(x).front();
    int heavy = 0;
    for (Vertex z : g.neighbors(y)) heavy += g.degree(z) > 1 ? 1 : 0;
    if (heavy <= 1) out.push_back({x, y});
  }
  return out;
}

namespace {

bool perfect_rec(const Graph& g, VertexSet uncovered, std::unordered_map<std::uint64_t, bool>& memo) {
  if (uncovered.empty()) return true;
  if (uncovered.size() % 2 != 0) return false;
  if (auto it = memo.find(uncovered.bits()); it != memo.end()) return it->second;
  const Vertex v = uncovered.front();
  bool found = false;
  for (Vertex u : g.neighbors(v) & uncovered) {
    if (perfect_rec(g, uncovered - VertexSet::single(v) - VertexSet::single(u), memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(uncovered.bits(), found);
  return found;
}

}  // namespace

bool has_perfect_matching(const Graph& g) {
  std::unordered_map<std::uint64_t, bool> memo;
  return perfect_rec(g, g.vertices(), memo);
}

}  // namespace sqpow
