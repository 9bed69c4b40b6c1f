#include "sqpow/report.hpp"

namespace sqpow {

Json vertex_set_json(const VertexNames& names, VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back((*names)[static_cast<std::size_t>(v)]);
  return out;
}

Json matching_json(const Graph& g, const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m.edges()) out.push_back({g.name(e.u), g.name(e.v)});
  return out;
}

Json partition_json(const Graph& g, const AdmissablePartition& p) {
  Json parts = Json::array();
  for (const Matching& part : p.parts) parts.push_back(matching_json(g, part));
  return {{"k", p.k}, {"parts", parts}};
}

Json ideal_json(const SquarefreeIdeal& ideal) {
  Json out = Json::array();
  for (VertexSet g : ideal.generators()) out.push_back(vertex_set_json(ideal.ambient(), g));
  return out;
}

Json betti_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({{"i", e.i}, {"alpha", vertex_set_json(table.ambient(), e.alpha)}, {"dim", e.dim}});
  }
  Json graded = Json::array();
  for (const auto& [ij, dim] : table.graded()) graded.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", dim}});
  Json out;
  out["convention"] = "ideal";
  out["entries"] = std::move(entries);
  out["graded"] = std::move(graded);
  out["regularity"] = table.empty() ? Json(nullptr) : Json(table.regularity());
  out["field"] = table.field().to_string();
  return out;
}

}  // namespace sqpow
