#include "sqpow/generators.hpp"

#include <algorithm>
#include <numeric>

#include "sqpow/matchings.hpp"

namespace sqpow {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

/// Uniform random labeled tree on `block` via a Prüfer sequence.
void random_tree(const std::vector<Vertex>& block, Rng& rng, std::vector<std::pair<Vertex, Vertex>>& edges) {
  const std::size_t m = block.size();
  if (m < 2) return;
  if (m == 2) {
    edges.emplace_back(block[0], block[1]);
    return;
  }
  std::vector<std::size_t> code(m - 2);
  for (auto& c : code) c = rng.below(m);
  std::vector<int> degree(m, 1);
  for (std::size_t c : code) ++degree[c];
  for (std::size_t c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(block[leaf], block[c]);
    --degree[leaf];
    --degree[c];
  }
  std::size_t a = m, b = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (degree[i] == 1) (a == m ? a : b) = i;
  }
  edges.emplace_back(block[a], block[b]);
}

}  // namespace

Graph gen_random_forest(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random_forest: n must be nonnegative");
  Rng rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> block;
  for (std::size_t i = 0; i < order.size(); ++i) {
    block.push_back(order[i]);
    const bool cut = i + 1 == order.size() || rng.chance(1, 5);
    if (cut) {
      random_tree(block, rng, edges);
      block.clear();
    }
  }
  return Graph(numbered_names(n), edges);
}

Graph gen_random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(num, den)) edges.emplace_back(a, b);
    }
  }
  return Graph(numbered_names(n), edges);
}

namespace {

/// m hubs joined through connectors along a random tree, with 1-2 pendant
/// leaves per hub; labels are shuffled.
Graph hub_candidate(int m, Rng& rng) {
  std::vector<std::pair<int, int>> hub_tree;
  {
    std::vector<Vertex> hubs(static_cast<std::size_t>(m));
    std::iota(hubs.begin(), hubs.end(), 0);
    std::vector<std::pair<Vertex, Vertex>> tmp;
    random_tree(hubs, rng, tmp);
    hub_tree.assign(tmp.begin(), tmp.end());
  }
  std::vector<int> leaf_count(static_cast<std::size_t>(m));
  for (auto& c : leaf_count) c = rng.between(1, 2);
  const int n = m + static_cast<int>(hub_tree.size()) + std::accumulate(leaf_count.begin(), leaf_count.end(), 0);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  shuffle(label, rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = m;
  for (auto [a, b] : hub_tree) {
    const int c = next++;
    edges.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(c)]);
    edges.emplace_back(label[static_cast<std::size_t>(c)], label[static_cast<std::size_t>(b)]);
  }
  for (int h = 0; h < m; ++h) {
    for (int j = 0; j < leaf_count[static_cast<std::size_t>(h)]; ++j) {
      edges.emplace_back(label[static_cast<std::size_t>(h)], label[static_cast<std::size_t>(next++)]);
    }
  }
  return Graph(numbered_names(n), edges);
}

Graph random_small_tree(int n, Rng& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  random_tree(all, rng, edges);
  return Graph(numbered_names(n), edges);
}

}  // namespace

Graph gen_cameron_walker(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_cameron_walker: m must be at least 1");
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    // Plain random trees first; the hub construction takes over when they miss.
    Graph g = attempt < 8 ? random_small_tree(rng.between(2 * m, 2 * m + 2), rng) : hub_candidate(m, rng);
    if (is_forest(g) && matching_number(g) == m && induced_matching_number(g) == m) return g;
  }
  throw GenerationError("gen_cameron_walker: no certified forest found for m = " + std::to_string(m));
}

SquarefreeIdeal gen_random_ideal(int num_vars, int max_gens, int min_degree, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  const int count = rng.between(1, max_gens);
  const int hi = std::min(max_degree, num_vars);
  const int lo = std::clamp(min_degree, 1, hi);
  std::vector<SquarefreeMonomial> gens;
  for (int i = 0; i < count; ++i) {
    const int degree = rng.between(lo, hi);
    std::vector<Vertex> vars(static_cast<std::size_t>(num_vars));
    std::iota(vars.begin(), vars.end(), 0);
    shuffle(vars, rng);
    VertexSet g;
    for (int j = 0; j < degree; ++j) g.insert(vars[static_cast<std::size_t>(j)]);
    gens.push_back(g);
  }
  return {SquarefreeIdeal::variables(num_vars), std::move(gens)};
}

}  // namespace sqpow
