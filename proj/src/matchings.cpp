#include "sqpow/matchings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sqpow {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (covered_.intersects(e.support())) throw GraphError("edges of a matching must be pairwise disjoint");
    covered_ |= e.support();
  }
}

bool is_admissable_sequence(std::span<const int> sizes, int k) {
  if (sizes.empty() || k < 1) return false;
  int sum = 0;
  for (int s : sizes) {
    if (s < 1) return false;
    sum += s;
  }
  return sum <= static_cast<int>(sizes.size()) + k - 1;
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_matching(g, k, [&](const std::vector<Edge>& es) { out.emplace_back(es); });
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  return std::all_of(m.edges().begin(), m.edges().end(), [&](const Edge& e) {
    return g.vertices().contains(e.support()) && g.has_edge(e);
  });
}

namespace {

int exhaustive_rec(const Graph& g, VertexSet live, std::unordered_map<std::uint64_t, int>& memo) {
  // Drop vertices with no live neighbor; they can never be matched.
  VertexSet useful;
  for (Vertex v : live) {
    if (g.neighbors(v).intersects(live)) useful.insert(v);
  }
  if (useful.size() < 2) return 0;
  if (auto it = memo.find(useful.bits()); it != memo.end()) return it->second;
  const Vertex v = useful.front();
  const VertexSet rest = useful - VertexSet::single(v);
  int best = exhaustive_rec(g, rest, memo);
  for (Vertex u : g.neighbors(v) & rest) {
    best = std::max(best, 1 + exhaustive_rec(g, rest - VertexSet::single(u), memo));
  }
  memo.emplace(useful.bits(), best);
  return best;
}

}  // namespace

int matching_number_exhaustive(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  return exhaustive_rec(g, g.vertices(), memo);
}

int matching_number(const Graph& g) {
  if (!is_forest(g)) return matching_number_exhaustive(g);
  Graph h = g;
  int count = 0;
  while (true) {
    auto ls = leaves(h);
    if (ls.empty()) break;
    const Vertex x = ls.front();
    const Vertex y = h.neighbors(x).front();
    h = h.remove_vertices(VertexSet::single(x) | VertexSet::single(y));
    ++count;
  }
  return count;
}

bool is_gap(const Graph& g, Edge e, Edge f) {
  if (e.support().intersects(f.support())) throw GraphError("is_gap: edges share a vertex");
  for (Vertex x : e.support()) {
    if (g.neighbors(x).intersects(f.support())) return false;
  }
  return true;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
  return is_matching_of(g, m) && g.edges_within(m.covered()) == m.size();
}

namespace {

struct InducedSearch {
  const Graph& g;
  std::span<const Edge> edges;
  std::vector<Edge> current;
  std::vector<Edge> best;

  // blocked = closed neighborhood of everything chosen so far
  void run(std::size_t start, VertexSet blocked) {
    if (current.size() > best.size()) best = current;
    std::size_t available = 0;
    for (std::size_t i = start; i < edges.size(); ++i) {
      if (!blocked.intersects(edges[i].support())) ++available;
    }
    if (current.size() + available <= best.size()) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
      const Edge e = edges[i];
      if (blocked.intersects(e.support())) continue;
      current.push_back(e);
      run(i + 1, blocked | g.closed_neighbors(e.u) | g.closed_neighbors(e.v));
      current.pop_back();
    }
  }
};

}  // namespace

Matching maximum_induced_matching(const Graph& g) {
  InducedSearch s{g, g.edges(), {}, {}};
  s.run(0, VertexSet{});
  return Matching(s.best);
}

int induced_matching_number(const Graph& g) { return maximum_induced_matching(g).size(); }

namespace {

/// Connected components of the "does not form a gap" relation on the edges of
/// a matching; each component lists edge positions in increasing order.
std::vector<std::vector<std::size_t>> conflict_components(const Graph& g, std::span<const Edge> es) {
  const std::size_t n = es.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet reach = g.neighbors(es[i].u) | g.neighbors(es[i].v);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (reach.intersects(es[j].support())) parent[find(j)] = find(i);
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(i);
  }
  return comps;
}

bool induces_forest(const Graph& g, VertexSet s) {
  int comps = 0;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v) & s;
      frontier = next - comp;
      comp |= next;
    }
    rest -= comp;
    ++comps;
  }
  return g.edges_within(s) == s.size() - comps;
}

bool admissable_edges(const Graph& g, std::span<const Edge> es, int k) {
  auto comps = conflict_components(g, es);
  for (const auto& c : comps) {
    if (c.size() < 2) continue;  // a single edge always induces a forest
    VertexSet s;
    for (std::size_t i : c) s |= es[i].support();
    if (!induces_forest(g, s)) return false;
  }
  return static_cast<int>(es.size()) <= static_cast<int>(comps.size()) + k - 1;
}

}  // namespace

std::optional<AdmissablePartition> is_k_admissable(const Graph& g, const Matching& m, int k) {
  if (k < 1) throw std::invalid_argument("is_k_admissable: k must be at least 1");
  if (m.empty()) throw GraphError("is_k_admissable: matching is empty");
  if (!is_matching_of(g, m)) throw GraphError("is_k_admissable: not a matching of the graph");
  const auto es = m.edges();
  if (!admissable_edges(g, es, k)) return std::nullopt;
  AdmissablePartition out;
  out.k = k;
  for (const auto& comp : conflict_components(g, es)) {
    std::vector<Edge> part;
    for (std::size_t i : comp) part.push_back(es[i]);
    out.parts.emplace_back(std::move(part));
  }
  return out;
}

namespace {

struct AdmissableSearch {
  const Graph& g;
  std::span<const Edge> edges;
  int k;
  int ceiling;  // mat(G); nothing can beat it
  std::vector<Edge> current;
  std::vector<Edge> best;

  bool done() const { return static_cast<int>(best.size()) >= ceiling; }

  void run(std::size_t start, VertexSet covered) {
    if (current.size() > best.size()) best = current;
    if (done()) return;
    VertexSet free_ends;
    for (std::size_t i = start; i < edges.size(); ++i) {
      if (!covered.intersects(edges[i].support())) free_ends |= edges[i].support();
    }
    if (static_cast<int>(current.size()) + free_ends.size() / 2 <= static_cast<int>(best.size())) return;
    for (std::size_t i = start; i < edges.size() && !done(); ++i) {
      const Edge e = edges[i];
      if (covered.intersects(e.support())) continue;
      current.push_back(e);
      // Subsets of admissable matchings are admissable, so a failing prefix
      // cannot be extended.
      if (admissable_edges(g, current, k)) run(i + 1, covered | e.support());
      current.pop_back();
    }
  }
};

}  // namespace

std::optional<Matching> maximum_admissable_matching(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("admissable_matching_number: k must be at least 1");
  AdmissableSearch s{g, g.edges(), k, matching_number(g), {}, {}};
  s.run(0, VertexSet{});
  if (s.best.empty()) return std::nullopt;
  return Matching(s.best);
}

int admissable_matching_number(const Graph& g, int k) {
  auto m = maximum_admissable_matching(g, k);
  return m ? m->size() : 0;
}

}  // namespace sqpow
