#include "sqpow/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace sqpow {

namespace {

class GraphBuilder {
 public:
  explicit GraphBuilder(bool strict) : strict_(strict) {}

  void declare(const std::string& name, const std::string& where) {
    if (index_.count(name) != 0) throw GraphError(where + "vertex '" + name + "' declared twice");
    index_.emplace(name, static_cast<Vertex>(names_.size()));
    names_.push_back(name);
  }

  Vertex lookup(const std::string& name, const std::string& where) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    if (strict_) throw GraphError(where + "endpoint '" + name + "' is not declared");
    declare(name, where);
    return index_.at(name);
  }

  void edge(const std::string& a, const std::string& b, const std::string& where) {
    if (a == b) throw GraphError(where + "loop at vertex '" + a + "'");
    Vertex x = lookup(a, where), y = lookup(b, where);
    Edge e(x, y);
    if (std::find(edges_.begin(), edges_.end(), std::pair{e.u, e.v}) != edges_.end()) {
      throw GraphError(where + "duplicate edge " + a + " " + b);
    }
    edges_.emplace_back(e.u, e.v);
  }

  Graph build() && { return Graph(std::move(names_), edges_); }

 private:
  bool strict_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace

Graph parse_graph(std::string_view text, bool strict) {
  GraphBuilder builder(strict);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "vertex") {
      if (words.size() != 2) throw GraphError(where + "expected 'vertex <id>'");
      builder.declare(words[1], where);
    } else if (words.size() == 2) {
      builder.edge(words[0], words[1], where);
    } else {
      throw GraphError(where + "expected '<id> <id>' or 'vertex <id>'");
    }
  }
  return std::move(builder).build();
}

Graph parse_graph_json(const Json& doc, bool strict) {
  if (!doc.is_object()) throw GraphError("graph JSON must be an object");
  GraphBuilder builder(strict);
  try {
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) builder.declare(v.get<std::string>(), "");
    }
    if (doc.contains("edges")) {
      std::size_t i = 0;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw GraphError("edges[" + std::to_string(i) + "]: expected a pair");
        }
        builder.edge(e[0].get<std::string>(), e[1].get<std::string>(), "edges[" + std::to_string(i) + "]: ");
        ++i;
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(std::string("malformed graph JSON: ") + ex.what());
  }
  return std::move(builder).build();
}

Graph parse_graph_any(std::string_view text, bool strict) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw GraphError(std::string("malformed graph JSON: ") + ex.what());
    }
    return parse_graph_json(doc, strict);
  }
  return parse_graph(text, strict);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (Vertex v : g.vertices()) out += "vertex " + g.name(v) + "\n";
  for (const Edge& e : g.edges()) out += g.name(e.u) + " " + g.name(e.v) + "\n";
  return out;
}

Json to_json(const Graph& g) {
  Json vs = Json::array();
  for (Vertex v : g.vertices()) vs.push_back(g.name(v));
  Json es = Json::array();
  for (const Edge& e : g.edges()) es.push_back({g.name(e.u), g.name(e.v)});
  return {{"vertices", vs}, {"edges", es}};
}

}  // namespace sqpow
