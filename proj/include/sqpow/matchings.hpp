#ifndef SQPOW_MATCHINGS_HPP
#define SQPOW_MATCHINGS_HPP

#include <optional>
#include <span>
#include <vector>

#include "sqpow/graph.hpp"

namespace sqpow {

/// A set of pairwise vertex-disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Throws GraphError if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  /// Vertices covered by the matching, i.e. the support of u_M.
  VertexSet covered() const { return covered_; }

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
  VertexSet covered_;
};

/// Pairwise gap-separated parts of a matching together with the k they certify.
struct AdmissablePartition {
  std::vector<Matching> parts;
  int k = 1;
};

/// Positive sizes with sum <= (number of parts) + k - 1.
bool is_admissable_sequence(std::span<const int> sizes, int k);

/// Calls f(const std::vector<Edge>&) for every matching of size exactly k, in
/// lexicographic order of sorted edge indices.
template <class F>
void for_each_matching(const Graph& g, int k, F&& f) {
  if (k < 0) return;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, VertexSet covered) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      f(static_cast<const std::vector<Edge>&>(chosen));
      return;
    }
    for (int i = start; i + (k - static_cast<int>(chosen.size())) <= m; ++i) {
      const Edge e = edges[static_cast<std::size_t>(i)];
      if (covered.intersects(e.support())) continue;
      chosen.push_back(e);
      self(self, i + 1, covered | e.support());
      chosen.pop_back();
    }
  };
  rec(rec, 0, VertexSet{});
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k);

bool is_matching_of(const Graph& g, const Matching& m);

/// mat(G). Forests are handled by repeatedly removing the first leaf together
/// with its neighbor; other graphs by exhaustive search.
int matching_number(const Graph& g);
/// mat(G) by memoized exhaustive search, regardless of the graph's shape.
int matching_number_exhaustive(const Graph& g);

/// e and f (disjoint edges of g) form a gap: no edge of g joins them.
/// Throws GraphError when e and f share a vertex.
bool is_gap(const Graph& g, Edge e, Edge f);

bool is_induced_matching(const Graph& g, const Matching& m);
int induced_matching_number(const Graph& g);
Matching maximum_induced_matching(const Graph& g);

/// Returns a k-admissable partition of m when one exists.
///
/// Edges of m that do not form a gap must share a part, so the connected
/// components of the "not a gap" relation on m give the finest candidate
/// partition. Merging parts never helps (the size sum is unchanged while the
/// number of parts drops), so m is k-admissable iff every such component
/// induces a forest and |m| <= (#components) + k - 1. Parts are ordered by
/// their smallest edge.
///
/// Throws GraphError when m is empty or not a matching of g, and
/// std::invalid_argument when k < 1.
std::optional<AdmissablePartition> is_k_admissable(const Graph& g, const Matching& m, int k);

/// aim(G, k): the largest size of a k-admissable matching, 0 if there is none.
int admissable_matching_number(const Graph& g, int k);
/// A k-admissable matching of maximum size (first found in edge order), or
/// nothing when g has no k-admissable matching.
std::optional<Matching> maximum_admissable_matching(const Graph& g, int k);

}  // namespace sqpow

#endif  // SQPOW_MATCHINGS_HPP
