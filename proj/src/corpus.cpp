#include "sqpow/corpus.hpp"

#include <algorithm>

namespace sqpow {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"fig1", "tree with indm = mat = 2",
       Graph::from_names({"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                         {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}, {"b", "f"},
                          {"c", "g"}, {"c", "h"}, {"c", "i"}})},
      {"fig2", "tree with aim(G,k) = 3, 4, 5, 6, 6, 6",
       Graph::from_names({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"},
                         {{"a", "b"}, {"b", "d"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "g"},
                          {"f", "h"}, {"h", "i"}, {"e", "j"}, {"j", "k"}, {"j", "l"}, {"l", "m"}})},
      {"fig3", "tree with distant leaves x4 and x6",
       Graph::from_names({"x1", "x2", "x3", "x4", "x5", "x6"},
                         {{"x1", "x2"}, {"x2", "x3"}, {"x2", "x5"}, {"x3", "x4"}, {"x5", "x6"}})},
  };
  return entries;
}

const Graph& corpus_graph(const std::string& name) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
  if (it == all.end()) throw GraphError("unknown corpus graph '" + name + "' (try 'corpus list')");
  return it->graph;
}

}  // namespace sqpow
