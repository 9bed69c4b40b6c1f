#ifndef SQPOW_CORPUS_HPP
#define SQPOW_CORPUS_HPP

#include <string>
#include <vector>

#include "sqpow/graph.hpp"

namespace sqpow {

struct CorpusEntry {
  std::string name;
  std::string description;
  Graph graph;
};

/// Built-in example graphs:
///   fig1  9-vertex tree with indm = mat = 2,
///   fig2  13-vertex tree on a..m with aim = 3, 4, 5, 6, 6, 6,
///   fig3  6-vertex tree on x1..x6 with distant leaves x4 and x6.
const std::vector<CorpusEntry>& corpus();

/// Throws GraphError for unknown names.
const Graph& corpus_graph(const std::string& name);

}  // namespace sqpow

#endif  // SQPOW_CORPUS_HPP
