#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sqpow/corpus.hpp"
#include "sqpow/generators.hpp"
#include "sqpow/graph_io.hpp"
#include "sqpow/matchings.hpp"
#include "sqpow/monomial_ideal.hpp"
#include "sqpow/report.hpp"

using namespace sqpow;

namespace {

/// x_i is variable i - 1.
VertexSet mono(std::initializer_list<int> vars) {
  VertexSet s;
  for (int v : vars) s.insert(v - 1);
  return s;
}

SquarefreeIdeal ideal(int n, std::vector<VertexSet> gens) { return {SquarefreeIdeal::variables(n), std::move(gens)}; }

VertexSet by_name(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(g.at(n));
  return s;
}

}  // namespace

TEST_CASE("minimalization and equality") {
  const auto gens = minimalize({mono({1, 2, 3}), mono({1, 2}), mono({1, 2}), mono({3})});
  CHECK(gens == std::vector<VertexSet>{mono({1, 2}), mono({3})});
  CHECK(ideal(4, {mono({1, 2, 3, 4}), mono({1, 2})}) == ideal(4, {mono({1, 2})}));
  CHECK(ideal(3, {mono({3}), mono({1})}).to_string() == "(x1, x3)");
  CHECK(ideal(3, {}).is_zero());
  CHECK(ideal(3, {mono({1, 2}), mono({2, 3})}).generator_degree() == 2);
  CHECK(ideal(3, {mono({1}), mono({2, 3})}).generator_degree() == -1);
  CHECK(ideal(3, {mono({1, 2})}).contains(mono({1, 2, 3})));
  CHECK_FALSE(ideal(3, {mono({1, 2})}).contains(mono({1, 3})));
  CHECK_THROWS(ideal(2, {mono({3})}));
}

TEST_CASE("edge ideals") {
  const Graph single = parse_graph("a b\n");
  CHECK(edge_ideal(single).generators() == std::vector<VertexSet>{VertexSet::of({0, 1})});
  CHECK(edge_ideal(corpus_graph("fig3")).num_generators() == 5);
  CHECK(edge_ideal(corpus_graph("fig3")).generator_degree() == 2);
  CHECK(edge_ideal(parse_graph("vertex a\nvertex b\n")).is_zero());
  CHECK(edge_ideal(single) == squarefree_power(single, 1));
}

TEST_CASE("squarefree powers") {
  const Graph single = parse_graph("a b\n");
  CHECK(squarefree_power(single, 1).num_generators() == 1);
  CHECK_THROWS_AS(squarefree_power(single, 0), std::invalid_argument);

  const Graph c4 = parse_graph("a b\nb c\nc d\nd a\n");
  const SquarefreeIdeal p = squarefree_power(c4, 2);
  CHECK(p.generators() == std::vector<VertexSet>{VertexSet::range(4)});
  CHECK(enumerate_matchings(c4, 2).size() == 2);

  CHECK(squarefree_power(corpus_graph("fig1"), 3).is_zero());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Graph r = seed % 2 ? gen_random_graph(rng.between(2, 10), 1, 3, seed) : gen_random_forest(12, seed);
    for (int k = 1; k <= 5; ++k) {
      const auto ms = oracle::matchings(r, k);
      std::set<std::uint64_t> supports;
      for (const auto& m : ms) supports.insert(oracle::covered(r, m).bits());
      const SquarefreeIdeal q = squarefree_power(r, k);
      CHECK(q.num_generators() == static_cast<int>(supports.size()));
      CHECK(q.num_generators() <= static_cast<int>(ms.size()));
      for (VertexSet gen : q.generators()) {
        CHECK(gen.size() == 2 * k);
        CHECK(supports.count(gen.bits()) == 1);
      }
    }
  }
}

TEST_CASE("colon by a monomial") {
  const SquarefreeIdeal i = ideal(3, {mono({1, 2}), mono({2, 3})});
  CHECK(colon(i, mono({2})) == ideal(3, {mono({1}), mono({3})}));
  CHECK(colon(i, VertexSet{}) == i);

  const Graph& g = corpus_graph("fig3");
  const SquarefreeIdeal lhs = colon(squarefree_power(g, 2), by_name(g, {"x5", "x6"}));
  const SquarefreeIdeal path =
      ideal(6, {by_name(g, {"x1", "x2"}), by_name(g, {"x2", "x3"}), by_name(g, {"x3", "x4"})});
  CHECK(lhs.generators() == path.generators());
  CHECK(lhs == squarefree_power(g.remove_vertices(by_name(g, {"x5", "x6"})), 1));
}

TEST_CASE("adding a monomial") {
  CHECK(add_monomial(ideal(2, {}), mono({1, 2})) == ideal(2, {mono({1, 2})}));
  CHECK(add_monomial(ideal(4, {mono({1, 2, 3, 4})}), mono({1, 2})) == ideal(4, {mono({1, 2})}));
  CHECK(sum(ideal(3, {mono({1, 2})}), ideal(3, {mono({3})})) == ideal(3, {mono({1, 2}), mono({3})}));

  // Path x1..x4 with k = 2: K = I^[2] + (x1 x2), then K : (x2) picks up x1.
  const Graph p4 = parse_graph("x1 x2\nx2 x3\nx3 x4\n");
  const SquarefreeIdeal k_ideal = add_monomial(squarefree_power(p4, 2), mono({1, 2}));
  CHECK(k_ideal == ideal(4, {mono({1, 2})}));
  CHECK(colon(k_ideal, mono({2})) == ideal(4, {mono({1})}));
}

TEST_CASE("idempotence") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SquarefreeIdeal i = gen_random_ideal(8, 8, 1, 4, seed);
    Rng rng(seed + 17);
    VertexSet m;
    for (int v = 0; v < 8; ++v) {
      if (rng.chance(1, 3)) m.insert(v);
    }
    CHECK(colon(colon(i, m), m) == colon(i, m));
    CHECK(add_monomial(add_monomial(i, m), m) == add_monomial(i, m));
    CHECK(SquarefreeIdeal(i.ambient(), minimalize(i.generators())) == i);
  }
}

TEST_CASE("restriction") {
  const SquarefreeIdeal i = ideal(3, {mono({1, 2}), mono({2, 3})});
  CHECK(restriction(i, lcm_of_generators(i)) == i);
  CHECK(restriction(i, VertexSet{}).is_zero());
  CHECK(restriction(i, mono({1, 2})) == ideal(3, {mono({1, 2})}));

  const Graph& g = corpus_graph("fig1");
  for (const Matching& m : enumerate_matchings(g, 2)) {
    CHECK(restriction(edge_ideal(g), m.covered()) == edge_ideal(g.induced(m.covered())));
  }

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph f = gen_random_forest(12, seed);
    Rng rng(seed);
    VertexSet u;
    for (Vertex v : f.vertices()) {
      if (rng.chance(1, 2)) u.insert(v);
    }
    for (int k = 1; k <= 3; ++k) {
      CHECK(restriction(squarefree_power(f, k), u) == squarefree_power(f.induced(u), k));
    }
  }
}

TEST_CASE("lcm of generators") {
  CHECK(lcm_of_generators(ideal(3, {mono({1, 2}), mono({2, 3})})) == mono({1, 2, 3}));
  CHECK(lcm_of_generators(ideal(3, {mono({2, 3})})) == mono({2, 3}));
  CHECK_THROWS_AS(lcm_of_generators(ideal(3, {})), std::domain_error);

  const Graph& g = corpus_graph("fig1");
  VertexSet expected;
  for (const auto& m : oracle::matchings(g, 2)) expected |= oracle::covered(g, m);
  CHECK(lcm_of_generators(squarefree_power(g, 2)) == expected);
  CHECK(expected == g.vertices());
}

TEST_CASE("colon by a leaf edge") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const Graph g = seed % 3 == 0 ? gen_random_graph(rng.between(3, 11), 1, 3, seed) : gen_random_forest(14, seed);
    const int mat = matching_number(g);
    for (Vertex x : leaves(g)) {
      const Vertex y = g.neighbors(x).front();
      const VertexSet xy = VertexSet::single(x) | VertexSet::single(y);
      for (int k = 2; k <= mat + 1; ++k) {
        CHECK(colon(squarefree_power(g, k), xy) == squarefree_power(g.remove_vertices(xy), k - 1));
      }
    }
  }
}

TEST_CASE("ideal JSON") {
  const Graph& g = corpus_graph("fig3");
  const Json j = ideal_json(edge_ideal(g));
  CHECK(j.size() == 5);
  CHECK(j[0] == Json::array({"x1", "x2"}));
}
