#include "sqpow/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "sqpow/graph_io.hpp"
#include "sqpow/report.hpp"

namespace sqpow {

namespace {

constexpr std::array kStatements{
    StatementInfo{"THM-4.6", "forest, 1 <= k <= mat: reg(I^[k]) <= aim(G,k) + k", true, true, false},
    StatementInfo{"THM-4.10", "forest, mat >= 2: reg(I^[2]) = aim(G,2) + 2", true, true, false},
    StatementInfo{"COR-4.11", "any graph, mat >= 2: reg(I^[2]) >= aim(G,2) + 2", true, true, false},
    StatementInfo{"PROP-4.12", "forest with indm = mat, 1 <= k <= mat: reg(I^[k]) = aim(G,k) + k", true, true, false},
    StatementInfo{"THM-5.8", "forest, 1 <= k <= mat: reg(I^[k]) = 2k iff aim(G,k) = k", true, true, false},
    StatementInfo{"COR-5.9", "forest, 1 <= k < mat: I^[k] linear implies I^[k+1] linear", true, true, false},
    StatementInfo{"THM-2.4", "any graph, mat >= 1: I^[mat] has a linear resolution", true, true, false},
    StatementInfo{"LEM-4.4", "leaf x with neighbor y, k >= 2: I(G)^[k] : (xy) = I(G - {x,y})^[k-1]", true, false, false},
    StatementInfo{"LEM-4.3", "forest with leaf x, neighbor y: mat(G) = mat(G - {x,y}) + 1", false, false, false},
    StatementInfo{"LEM-3.5", "2 <= k <= mat: aim(G,k) <= aim(G,k-1) + 1", true, false, false},
    StatementInfo{"LEM-3.8", "every nonempty subset of a k-admissable matching is k-admissable", true, false, false},
    StatementInfo{"LEM-4.8", "M induced, H = G[u_M], 1 <= k <= |M|: b_{|M|-k, u_M}(I(H)^[k]) != 0", true, true, false},
    StatementInfo{"LEM-4.9", "M 2-admissable, H = G[u_M], 2 <= k <= |M|: b_{|M|-k, u_M}(I(H)^[k]) != 0", true, true,
                  false},
    StatementInfo{"LEM-5.7", "M k-admissable with |M| = k+1, H = G[u_M]: K^{u_M}(I(H)^[k]) is disconnected", true,
                  true, false},
    StatementInfo{"COR-2.6", "H = G - v: b_{i,a}(I(H)^[k]) <= b_{i,a}(I(G)^[k]) and reg(I(H)^[k]) <= reg(I(G)^[k])",
                  true, true, false},
    StatementInfo{"CONJ-4.13", "forest, 1 <= k <= mat: reg(I^[k]) = aim(G,k) + k", true, true, true},
};

/// Matchings examined per verdict by the witness-driven lemmas.
constexpr std::size_t kWitnessCap = 24;

Verdict make(std::string_view id, int k, CheckContext& ctx) {
  Verdict v;
  v.statement = std::string(id);
  v.k = k;
  Json rep;
  rep["statement"] = v.statement;
  rep["graph"] = to_json(ctx.graph());
  rep["k"] = k;
  rep["field"] = ctx.field().to_string();
  rep["seed"] = ctx.seed() ? Json(*ctx.seed()) : Json(nullptr);
  v.reproducer = std::move(rep);
  return v;
}

Verdict inapplicable(Verdict v, std::string why) {
  v.outcome = Outcome::inapplicable;
  v.detail = std::move(why);
  return v;
}

Verdict decide(Verdict v, bool holds) {
  v.outcome = holds ? Outcome::pass : Outcome::fail;
  return v;
}

/// Matchings grown edge by edge in edge order, keeping only those accepted by
/// `keep` (which must be hereditary for the enumeration to be complete).
std::vector<Matching> hereditary_matchings(const Graph& g, int max_size,
                                           const std::function<bool(const std::vector<Edge>&)>& keep) {
  std::vector<Matching> out;
  const auto edges = g.edges();
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, std::size_t start, VertexSet covered) -> void {
    if (!chosen.empty()) out.emplace_back(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
      if (covered.intersects(edges[i].support())) continue;
      chosen.push_back(edges[i]);
      if (keep(chosen)) self(self, i + 1, covered | edges[i].support());
      chosen.pop_back();
    }
  };
  rec(rec, 0, VertexSet{});
  return out;
}

/// Largest first, then in enumeration order; at most kWitnessCap.
std::vector<Matching> pick_witnesses(std::vector<Matching> all, int min_size) {
  std::erase_if(all, [&](const Matching& m) { return m.size() < min_size; });
  std::stable_sort(all.begin(), all.end(), [](const Matching& a, const Matching& b) { return a.size() > b.size(); });
  if (all.size() > kWitnessCap) all.resize(kWitnessCap);
  return all;
}

/// b_{|M|-k, u_M}(I(H)^[k]) for every witness M; pass iff all are nonzero.
Verdict perfect_matching_betti(Verdict v, CheckContext& ctx, const std::vector<Matching>& witnesses, int k) {
  const Graph& g = ctx.graph();
  Json per = Json::array();
  std::size_t smallest = 0;
  bool first = true;
  bool holds = true;
  for (const Matching& m : witnesses) {
    const Graph h = g.induced(m.covered());
    const auto betti = multigraded_betti(squarefree_power(h, k), m.covered(), ctx.field());
    const int i = m.size() - k;
    const auto it = betti.find(i);
    const std::size_t b = it == betti.end() ? 0 : it->second;
    if (first || b < smallest) smallest = b;
    first = false;
    if (b == 0) {
      holds = false;
      v.witness = {{"matching", matching_json(g, m)}, {"i", i}};
    }
    per.push_back(b);
  }
  v.lhs = smallest;
  v.rhs = 0;
  v.detail = "min b_{|M|-k, u_M} over " + std::to_string(witnesses.size()) + " matchings (must be > 0)";
  if (holds) v.witness = {{"values", per}};
  return decide(std::move(v), holds);
}

Verdict check_reg_vs_aim(std::string_view id, CheckContext& ctx, int k) {
  Verdict v = make(id, k, ctx);
  const int mat = ctx.mat();
  if (id == "COR-4.11") {
    if (mat < 2 || k != 2) return inapplicable(std::move(v), "needs mat >= 2 and k = 2");
  } else {
    if (!ctx.forest()) return inapplicable(std::move(v), "not a forest");
    if (id == "THM-4.10") {
      if (mat < 2 || k != 2) return inapplicable(std::move(v), "needs mat >= 2 and k = 2");
    } else if (k < 1 || k > mat) {
      return inapplicable(std::move(v), "needs 1 <= k <= mat");
    }
    if (id == "PROP-4.12" && ctx.indm() != mat) return inapplicable(std::move(v), "indm != mat");
  }
  const int reg = ctx.reg(k);
  const int bound = ctx.aim(k) + k;
  v.lhs = reg;
  v.rhs = bound;
  if (id == "THM-4.6") {
    v.detail = "reg <= aim + k";
    return decide(std::move(v), reg <= bound);
  }
  if (id == "COR-4.11") {
    v.detail = "reg >= aim + k";
    return decide(std::move(v), reg >= bound);
  }
  v.detail = "reg = aim + k";
  if (id == "CONJ-4.13") v.witness = {{"slack", reg - bound}};
  return decide(std::move(v), reg == bound);
}

Verdict check_thm_5_8(CheckContext& ctx, int k) {
  Verdict v = make("THM-5.8", k, ctx);
  if (!ctx.forest()) return inapplicable(std::move(v), "not a forest");
  if (k < 1 || k > ctx.mat()) return inapplicable(std::move(v), "needs 1 <= k <= mat");
  const int reg = ctx.reg(k);
  const int aim = ctx.aim(k);
  v.lhs = {{"reg", reg}, {"reg_is_2k", reg == 2 * k}};
  v.rhs = {{"aim", aim}, {"aim_is_k", aim == k}};
  v.detail = "reg = 2k iff aim = k";
  return decide(std::move(v), (reg == 2 * k) == (aim == k));
}

Verdict check_cor_5_9(CheckContext& ctx, int k) {
  Verdict v = make("COR-5.9", k, ctx);
  if (!ctx.forest()) return inapplicable(std::move(v), "not a forest");
  if (k < 1 || k >= ctx.mat()) return inapplicable(std::move(v), "needs 1 <= k < mat");
  const bool lin_k = ctx.linear(k);
  const bool lin_next = ctx.linear(k + 1);
  v.lhs = {{"reg_k", ctx.reg(k)}, {"linear_k", lin_k}};
  v.rhs = {{"reg_k+1", ctx.reg(k + 1)}, {"linear_k+1", lin_next}};
  v.detail = "linear at k implies linear at k+1";
  return decide(std::move(v), !lin_k || lin_next);
}

Verdict check_thm_2_4(CheckContext& ctx, int k) {
  Verdict v = make("THM-2.4", k, ctx);
  const int mat = ctx.mat();
  if (mat < 1 || k != mat) return inapplicable(std::move(v), "needs mat >= 1 and k = mat");
  v.lhs = ctx.reg(k);
  v.rhs = 2 * k;
  v.detail = "I^[mat] linear: reg = 2 mat";
  return decide(std::move(v), ctx.linear(k));
}

Verdict check_lem_4_4(CheckContext& ctx, int k) {
  Verdict v = make("LEM-4.4", k, ctx);
  const Graph& g = ctx.graph();
  const auto leafs = leaves(g);
  if (leafs.empty()) return inapplicable(std::move(v), "no leaf");
  if (k < 2 || k > ctx.mat() + 1) return inapplicable(std::move(v), "needs 2 <= k <= mat + 1");
  Json lhs = Json::array(), rhs = Json::array(), checked = Json::array();
  bool holds = true;
  for (Vertex x : leafs) {
    const Vertex y = g.neighbors(x).front();
    const VertexSet xy = VertexSet::single(x) | VertexSet::single(y);
    const SquarefreeIdeal left = colon(ctx.power(k), xy);
    const SquarefreeIdeal right = squarefree_power(g.remove_vertices(xy), k - 1);
    lhs.push_back(left.num_generators());
    rhs.push_back(right.num_generators());
    checked.push_back({g.name(x), g.name(y)});
    if (!(left == right) && holds) {
      holds = false;
      v.witness = {{"leaf", g.name(x)}, {"neighbor", g.name(y)}, {"colon", ideal_json(left)},
                   {"power", ideal_json(right)}};
    }
  }
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.detail = "generator counts of I^[k]:(xy) and I(G-{x,y})^[k-1] per leaf edge; ideals compared exactly";
  if (holds) v.witness = {{"leaf_edges", checked}};
  return decide(std::move(v), holds);
}

Verdict check_lem_4_3(CheckContext& ctx) {
  Verdict v = make("LEM-4.3", 0, ctx);
  const Graph& g = ctx.graph();
  if (!ctx.forest()) return inapplicable(std::move(v), "not a forest");
  const auto leafs = leaves(g);
  if (leafs.empty()) return inapplicable(std::move(v), "no leaf");
  const int mat = matching_number_exhaustive(g);
  Json rhs = Json::array();
  bool holds = true;
  for (Vertex x : leafs) {
    const Vertex y = g.neighbors(x).front();
    const int rest = matching_number_exhaustive(g.remove_vertices(VertexSet::single(x) | VertexSet::single(y))) + 1;
    rhs.push_back(rest);
    if (rest != mat && holds) {
      holds = false;
      v.witness = {{"leaf", g.name(x)}, {"neighbor", g.name(y)}};
    }
  }
  v.lhs = mat;
  v.rhs = std::move(rhs);
  v.detail = "mat(G) against mat(G - {x,y}) + 1 for every leaf x, both by exhaustive search";
  return decide(std::move(v), holds);
}

Verdict check_lem_3_5(CheckContext& ctx, int k) {
  Verdict v = make("LEM-3.5", k, ctx);
  if (k < 2 || k > ctx.mat()) return inapplicable(std::move(v), "needs 2 <= k <= mat");
  v.lhs = ctx.aim(k);
  v.rhs = ctx.aim(k - 1) + 1;
  v.detail = "aim(G,k) <= aim(G,k-1) + 1";
  return decide(std::move(v), ctx.aim(k) <= ctx.aim(k - 1) + 1);
}

Verdict check_lem_3_8(CheckContext& ctx, int k) {
  Verdict v = make("LEM-3.8", k, ctx);
  if (k < 1 || k > ctx.mat()) return inapplicable(std::move(v), "needs 1 <= k <= mat");
  const auto& witness = ctx.aim_witness(k);
  if (!witness) return inapplicable(std::move(v), "no k-admissable matching");
  const Graph& g = ctx.graph();
  const auto edges = witness->edges();
  const std::uint32_t full = (std::uint32_t{1} << edges.size()) - 1;
  int good = 0;
  bool holds = true;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1U) sub.push_back(edges[i]);
    }
    const Matching m(std::move(sub));
    if (is_k_admissable(g, m, k)) {
      ++good;
    } else if (holds) {
      holds = false;
      v.witness = {{"matching", matching_json(g, *witness)}, {"subset", matching_json(g, m)}};
    }
  }
  v.lhs = good;
  v.rhs = full;
  v.detail = "admissable subsets of a maximum k-admissable matching, out of all nonempty subsets";
  if (holds) v.witness = {{"matching", matching_json(g, *witness)}};
  return decide(std::move(v), holds);
}

Verdict check_lem_4_8(CheckContext& ctx, int k) {
  Verdict v = make("LEM-4.8", k, ctx);
  if (k < 1) return inapplicable(std::move(v), "needs k >= 1");
  const Graph& g = ctx.graph();
  auto all = hereditary_matchings(g, kMaxVertices, [&](const std::vector<Edge>& m) {
    const Edge& e = m.back();
    return std::all_of(m.begin(), m.end() - 1, [&](const Edge& f) { return is_gap(g, e, f); });
  });
  const auto witnesses = pick_witnesses(std::move(all), k);
  if (witnesses.empty()) return inapplicable(std::move(v), "no induced matching of size >= k");
  return perfect_matching_betti(std::move(v), ctx, witnesses, k);
}

Verdict check_lem_4_9(CheckContext& ctx, int k) {
  Verdict v = make("LEM-4.9", k, ctx);
  if (k < 2) return inapplicable(std::move(v), "needs k >= 2");
  const Graph& g = ctx.graph();
  auto all = hereditary_matchings(g, kMaxVertices, [&](const std::vector<Edge>& m) {
    return is_k_admissable(g, Matching(m), 2).has_value();
  });
  const auto witnesses = pick_witnesses(std::move(all), k);
  if (witnesses.empty()) return inapplicable(std::move(v), "no 2-admissable matching of size >= k");
  return perfect_matching_betti(std::move(v), ctx, witnesses, k);
}

Verdict check_lem_5_7(CheckContext& ctx, int k) {
  Verdict v = make("LEM-5.7", k, ctx);
  if (k < 1) return inapplicable(std::move(v), "needs k >= 1");
  const Graph& g = ctx.graph();
  auto all = hereditary_matchings(g, k + 1, [&](const std::vector<Edge>& m) {
    return is_k_admissable(g, Matching(m), k).has_value();
  });
  std::erase_if(all, [&](const Matching& m) { return m.size() != k + 1; });
  if (all.size() > kWitnessCap) all.resize(kWitnessCap);
  if (all.empty()) return inapplicable(std::move(v), "no k-admissable matching of size k + 1");
  std::size_t fewest = SIZE_MAX;
  bool holds = true;
  for (const Matching& m : all) {
    const SquarefreeIdeal ideal = squarefree_power(g.induced(m.covered()), k);
    const std::size_t parts = upper_koszul(ideal, m.covered()).components().size();
    const auto betti = multigraded_betti(ideal, m.covered(), ctx.field());
    const bool b1 = betti.contains(1);
    fewest = std::min(fewest, parts);
    if ((parts < 2 || !b1) && holds) {
      holds = false;
      v.witness = {{"matching", matching_json(g, m)}, {"components", parts}, {"b1_nonzero", b1}};
    }
  }
  v.lhs = fewest;
  v.rhs = 2;
  v.detail = "fewest components of K^{u_M}(I(H)^[k]) over " + std::to_string(all.size()) +
             " matchings (must be >= 2, with b_{1,u_M} != 0)";
  return decide(std::move(v), holds);
}

Verdict check_cor_2_6(CheckContext& ctx, int k) {
  Verdict v = make("COR-2.6", k, ctx);
  if (k < 1 || k > ctx.mat()) return inapplicable(std::move(v), "needs 1 <= k <= mat");
  const Graph& g = ctx.graph();
  const BettiTable& big = ctx.table(k);
  const int reg = big.regularity();
  Json regs = Json::array();
  bool holds = true;
  for (Vertex x : g.vertices()) {
    const Graph h = g.remove_vertices(VertexSet::single(x));
    const SquarefreeIdeal ideal = squarefree_power(h, k);
    if (ideal.is_zero()) continue;
    const BettiTable small = betti_table(ideal, ctx.field(), ctx.betti_options());
    regs.push_back({{"deleted", g.name(x)}, {"reg", small.regularity()}});
    bool dominated = small.regularity() <= reg;
    for (const auto& e : small.entries()) dominated = dominated && e.dim <= big.at(e.i, e.alpha);
    if (!dominated && holds) {
      holds = false;
      v.witness = {{"deleted", g.name(x)}};
    }
  }
  if (regs.empty()) return inapplicable(std::move(v), "every deletion leaves mat < k");
  v.lhs = std::move(regs);
  v.rhs = reg;
  v.detail = "Betti numbers and regularity of G - v bounded by those of G";
  return decide(std::move(v), holds);
}

}  // namespace

std::span<const StatementInfo> statements() { return kStatements; }

const StatementInfo& statement_info(std::string_view id) {
  for (const auto& s : kStatements) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown statement id: " + std::string(id));
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::inapplicable:
      break;
  }
  return "inapplicable";
}

Json to_json(const Verdict& v) {
  Json out;
  out["statement"] = v.statement;
  out["k"] = v.k;
  out["outcome"] = std::string(to_string(v.outcome));
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["detail"] = v.detail;
  out["witness"] = v.witness;
  out["reproducer"] = v.reproducer;
  return out;
}

CheckContext::CheckContext(Graph g, FieldSpec field, std::optional<std::uint64_t> seed, BettiOptions betti)
    : graph_(std::move(g)), field_(field), seed_(seed), betti_(betti) {}

bool CheckContext::forest() {
  if (!forest_) forest_ = is_forest(graph_);
  return *forest_;
}

int CheckContext::mat() {
  if (!mat_) mat_ = matching_number(graph_);
  return *mat_;
}

int CheckContext::indm() {
  if (!indm_) indm_ = induced_matching_number(graph_);
  return *indm_;
}

const std::optional<Matching>& CheckContext::aim_witness(int k) {
  auto it = witness_.find(k);
  if (it == witness_.end()) it = witness_.emplace(k, maximum_admissable_matching(graph_, k)).first;
  return it->second;
}

int CheckContext::aim(int k) {
  const auto& w = aim_witness(k);
  return w ? w->size() : 0;
}

const SquarefreeIdeal& CheckContext::power(int k) {
  auto it = powers_.find(k);
  if (it == powers_.end()) it = powers_.emplace(k, squarefree_power(graph_, k)).first;
  return it->second;
}

const BettiTable& CheckContext::table(int k) {
  auto it = tables_.find(k);
  if (it == tables_.end()) {
    if (graph_.num_vertices() > kBettiVertexCap) {
      throw CapError("Betti computations are capped at " + std::to_string(kBettiVertexCap) + " vertices");
    }
    it = tables_.emplace(k, betti_table(power(k), field_, betti_)).first;
  }
  return it->second;
}

bool CheckContext::linear(int k) {
  const BettiTable& t = table(k);
  const auto entries = t.entries();
  return std::all_of(entries.begin(), entries.end(), [&](const BettiEntry& e) { return e.alpha.size() - e.i == 2 * k; });
}

std::vector<int> candidate_ks(const StatementInfo& info, CheckContext& ctx) {
  if (!info.uses_k) return {0};
  std::vector<int> ks;
  for (int k = 1; k <= ctx.mat() + 1; ++k) ks.push_back(k);
  return ks;
}

Verdict check(std::string_view id, CheckContext& ctx, int k) {
  const StatementInfo& info = statement_info(id);
  const int n = ctx.graph().num_vertices();
  const int cap = info.needs_betti ? kBettiVertexCap : kMatchingVertexCap;
  if (n > cap) {
    throw CapError(std::string(id) + ": graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(cap));
  }
  if (id == "THM-4.6" || id == "THM-4.10" || id == "COR-4.11" || id == "PROP-4.12" || id == "CONJ-4.13") {
    return check_reg_vs_aim(id, ctx, k);
  }
  if (id == "THM-5.8") return check_thm_5_8(ctx, k);
  if (id == "COR-5.9") return check_cor_5_9(ctx, k);
  if (id == "THM-2.4") return check_thm_2_4(ctx, k);
  if (id == "LEM-4.4") return check_lem_4_4(ctx, k);
  if (id == "LEM-4.3") return check_lem_4_3(ctx);
  if (id == "LEM-3.5") return check_lem_3_5(ctx, k);
  if (id == "LEM-3.8") return check_lem_3_8(ctx, k);
  if (id == "LEM-4.8") return check_lem_4_8(ctx, k);
  if (id == "LEM-4.9") return check_lem_4_9(ctx, k);
  if (id == "LEM-5.7") return check_lem_5_7(ctx, k);
  return check_cor_2_6(ctx, k);
}

Verdict check(std::string_view id, const Graph& g, int k, const FieldSpec& field) {
  CheckContext ctx(g, field);
  return check(id, ctx, k);
}

}  // namespace sqpow
