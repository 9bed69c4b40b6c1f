#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>

#include "sqpow/betti.hpp"
#include "sqpow/corpus.hpp"
#include "sqpow/generators.hpp"
#include "sqpow/graph_io.hpp"
#include "sqpow/matchings.hpp"
#include "sqpow/report.hpp"
#include "sqpow/verify.hpp"

namespace sqpow::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string corpus;
  std::optional<int> k;
  std::string field = "q";
  std::string json;
  std::uint64_t seed = 42;
  int n_min = 2;
  int n_max = 10;
  int trials = 200;
  std::vector<std::string> statements;
  bool strict = false;
  bool any_graph = false;
  bool single_field = false;
  unsigned threads = 0;
  std::string kind = "forest";
  int n = 8;
  int m = 2;
  std::string action = "list";
  std::string name;
};

Graph load_graph(const Options& o) {
  if (o.input.empty() == o.corpus.empty()) throw UsageError("give exactly one of --input and --corpus");
  if (!o.corpus.empty()) return corpus_graph(o.corpus);
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw UsageError("cannot read " + o.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph_any(text, o.strict);
}

/// Writes `doc` to the --json target and `text` to out unless JSON replaces it.
void emit(const Options& o, std::ostream& out, const Json& doc, const std::string& text) {
  if (o.json == "-") {
    out << doc.dump(2) << "\n";
    return;
  }
  out << text;
  if (!o.json.empty()) {
    std::ofstream file(o.json, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.json);
    file << doc.dump(2) << "\n";
  }
}

std::string names(const Graph& g, VertexSet s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ", ") + g.name(v);
  return out;
}

std::string matching_text(const Graph& g, const Matching& m) {
  std::string out = "{";
  for (const Edge& e : m.edges()) out += (out.size() > 1 ? " " : "") + g.name(e.u) + g.name(e.v);
  return out + "}";
}

std::string partition_text(const Graph& g, const AdmissablePartition& p) {
  std::string out;
  for (const Matching& part : p.parts) out += (out.empty() ? "" : " | ") + matching_text(g, part);
  return out;
}

Json aim_entry(const Graph& g, int k, std::string& text) {
  const auto w = maximum_admissable_matching(g, k);
  Json e{{"k", k}, {"aim", w ? w->size() : 0}};
  std::ostringstream line;
  line << "  k=" << k << ": aim = " << (w ? w->size() : 0);
  if (w) {
    const auto p = is_k_admissable(g, *w, k);
    e["witness"] = matching_json(g, *w);
    e["partition"] = partition_json(g, *p);
    line << "  witness " << partition_text(g, *p);
  } else {
    e["witness"] = nullptr;
    e["partition"] = nullptr;
  }
  text += line.str() + "\n";
  return e;
}

void require_betti_cap(const Graph& g) {
  if (g.num_vertices() > kBettiVertexCap) {
    throw CapError("Betti computations are capped at " + std::to_string(kBettiVertexCap) + " vertices");
  }
}

std::string power_text(int k, const SquarefreeIdeal& ideal, const BettiTable& t, bool linear) {
  std::ostringstream s;
  s << "I(G)^[" << k << "]: " << ideal.num_generators() << " generators over " << t.field().to_string() << "\n";
  s << format_graded(t);
  s << "regularity: " << t.regularity() << "\nlinear resolution: " << (linear ? "yes" : "no") << "\n";
  return s.str();
}

bool is_linear(const BettiTable& t, int k) { return t.regularity() == 2 * k; }

int cmd_analyze(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const FieldSpec field = FieldSpec::parse(o.field);
  const bool forest = is_forest(g);
  const int mat = matching_number(g);
  const int indm = induced_matching_number(g);
  if (o.k && (*o.k < 1 || *o.k > mat)) throw UsageError("--k must lie in [1, mat(G)] = [1, " + std::to_string(mat) + "]");
  std::ostringstream text;
  text << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges" << (forest ? ", forest" : "")
       << "\nmat = " << mat << "\nindm = " << indm << "\n";
  Json doc;
  doc["graph"] = to_json(g);
  doc["vertices"] = g.num_vertices();
  doc["edges"] = g.num_edges();
  doc["forest"] = forest;
  doc["mat"] = mat;
  doc["indm"] = indm;
  if (forest) {
    VertexSet dl;
    for (const auto& d : distant_leaves(g)) dl.insert(d.leaf);
    doc["distant_leaves"] = vertex_set_json(g.names(), dl);
    text << "distant leaves: " << names(g, dl) << "\n";
  }

  std::string aim_text = "aim(G,k):\n";
  Json aims = Json::array();
  for (int k = 1; k <= mat; ++k) aims.push_back(aim_entry(g, k, aim_text));
  doc["aim"] = std::move(aims);
  text << aim_text;

  // Regularity for every k when no k is requested; full Betti table for a requested k.
  Json powers = Json::array();
  const bool within_cap = g.num_vertices() <= kBettiVertexCap;
  if (o.k) require_betti_cap(g);
  if (within_cap && mat >= 1) {
    text << "reg(I(G)^[k]):\n";
    const int lo = o.k ? *o.k : 1;
    const int hi = o.k ? *o.k : mat;
    for (int k = lo; k <= hi; ++k) {
      const SquarefreeIdeal ideal = squarefree_power(g, k);
      const BettiTable t = betti_table(ideal, field);
      const bool linear = is_linear(t, k);
      Json p{{"k", k}, {"generators", ideal.num_generators()}, {"regularity", t.regularity()}, {"linear", linear}};
      text << "  k=" << k << ": reg = " << t.regularity() << (linear ? " (linear)" : "") << "\n";
      if (o.k) {
        p["betti"] = betti_json(t);
        text << power_text(k, ideal, t, linear);
      }
      powers.push_back(std::move(p));
    }
  } else if (!within_cap) {
    text << "reg(I(G)^[k]): skipped, graph exceeds the " << kBettiVertexCap << "-vertex Betti cap\n";
  }
  doc["field"] = field.to_string();
  doc["powers"] = std::move(powers);
  emit(o, out, doc, text.str());
  return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const FieldSpec field = FieldSpec::parse(o.field);
  const int k = o.k.value_or(1);
  if (k < 1) throw UsageError("--k must be at least 1");
  require_betti_cap(g);
  const SquarefreeIdeal ideal = squarefree_power(g, k);
  if (ideal.is_zero()) throw UsageError("I(G)^[" + std::to_string(k) + "] is the zero ideal (k > mat(G))");
  const BettiTable t = betti_table(ideal, field);
  const bool linear = is_linear(t, k);
  Json doc;
  doc["k"] = k;
  doc["generators"] = ideal_json(ideal);
  doc["linear"] = linear;
  doc["betti"] = betti_json(t);
  emit(o, out, doc, power_text(k, ideal, t, linear));
  return kExitOk;
}

int cmd_aim(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  if (g.num_vertices() > kMatchingVertexCap) {
    throw CapError("matching computations are capped at " + std::to_string(kMatchingVertexCap) + " vertices");
  }
  const int mat = matching_number(g);
  if (o.k && *o.k < 1) throw UsageError("--k must be at least 1");
  std::string text = "aim(G,k):\n";
  Json entries = Json::array();
  const int lo = o.k ? *o.k : 1;
  const int hi = o.k ? *o.k : mat;
  for (int k = lo; k <= hi; ++k) entries.push_back(aim_entry(g, k, text));
  Json doc;
  doc["mat"] = mat;
  doc["aim"] = std::move(entries);
  emit(o, out, doc, text);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  CheckContext ctx(g, FieldSpec::parse(o.field));
  std::vector<std::string> ids = o.statements;
  if (ids.empty()) {
    for (const auto& s : statements()) ids.emplace_back(s.id);
  }
  for (const auto& id : ids) statement_info(id);
  std::ostringstream text;
  Json verdicts = Json::array();
  bool failed = false;
  for (const auto& id : ids) {
    const StatementInfo& info = statement_info(id);
    const std::vector<int> ks = o.k ? std::vector<int>{*o.k} : candidate_ks(info, ctx);
    for (int k : ks) {
      const Verdict v = check(id, ctx, k);
      std::string tag(to_string(v.outcome));
      for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      text << std::left << std::setw(13) << tag << std::setw(10) << id << " k=" << k;
      if (v.outcome == Outcome::inapplicable) {
        text << "  (" << v.detail << ")";
      } else {
        text << "  lhs=" << v.lhs.dump() << " rhs=" << v.rhs.dump() << "  " << v.detail;
      }
      if (v.outcome == Outcome::fail && info.conjecture) text << "  [open conjecture]";
      text << "\n";
      if (v.outcome == Outcome::fail && !info.conjecture) failed = true;
      verdicts.push_back(to_json(v));
    }
  }
  Json doc;
  doc["graph"] = to_json(g);
  doc["field"] = ctx.field().to_string();
  doc["verdicts"] = std::move(verdicts);
  emit(o, out, doc, text.str());
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzConfig cfg;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.field = FieldSpec::parse(o.field);
  cfg.statements = o.statements;
  cfg.forest_only = !o.any_graph;
  cfg.cross_field = !o.single_field;
  cfg.threads = o.threads;
  const FuzzReport report = fuzz(cfg);

  std::ostringstream text;
  text << "fuzz: " << cfg.trials << " " << (cfg.forest_only ? "forests" : "graphs") << ", n in [" << cfg.n_min << ", "
       << cfg.n_max << "], seed " << cfg.seed << ", field " << cfg.field.to_string() << "\n";
  text << std::left << std::setw(11) << "statement" << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
       << std::setw(8) << "n/a" << std::setw(9) << "skipped" << "\n";
  for (const auto& t : report.statements) {
    text << std::left << std::setw(11) << t.id << std::right << std::setw(7) << t.pass << std::setw(7) << t.fail
         << std::setw(8) << t.inapplicable << std::setw(9) << t.skipped << "\n";
  }
  if (!report.slack_histogram.empty()) {
    text << "reg - (aim + k) over forest instances:\n";
    for (const auto& [slack, count] : report.slack_histogram) {
      text << std::setw(6) << slack << " " << std::setw(6) << count << " "
           << std::string(static_cast<std::size_t>(std::min(count, 60)), '#') << "\n";
    }
  }
  if (!report.field_disagreements.empty()) {
    text << "FIELD DISAGREEMENTS: " << report.field_disagreements.size() << "\n";
  }
  text << (report.ok() ? "ok" : "FAILED") << "\n";
  emit(o, out, report.to_json(), text.str());
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Graph g;
  if (o.kind == "forest") {
    g = gen_random_forest(o.n, o.seed);
  } else if (o.kind == "graph") {
    g = gen_random_graph(o.n, 1, 3, o.seed);
  } else if (o.kind == "cameron-walker") {
    g = gen_cameron_walker(o.m, o.seed);
  } else {
    throw UsageError("unknown --kind " + o.kind);
  }
  emit(o, out, to_json(g), to_edge_list(g));
  return kExitOk;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.action == "list") {
    std::ostringstream text;
    Json doc = Json::array();
    for (const auto& e : corpus()) {
      text << std::left << std::setw(6) << e.name << std::right << std::setw(3) << e.graph.num_vertices()
           << " vertices " << std::setw(3) << e.graph.num_edges() << " edges  " << e.description << "\n";
      doc.push_back({{"name", e.name},
                     {"vertices", e.graph.num_vertices()},
                     {"edges", e.graph.num_edges()},
                     {"description", e.description}});
    }
    emit(o, out, doc, text.str());
    return kExitOk;
  }
  if (o.action == "show") {
    if (o.name.empty()) throw UsageError("corpus show needs a name");
    const Graph& g = corpus_graph(o.name);
    emit(o, out, to_json(g), to_edge_list(g));
    return kExitOk;
  }
  throw UsageError("corpus action must be list or show");
}

void add_graph_source(CLI::App* app, Options& o) {
  app->add_option("--input", o.input, "graph file (edge list or JSON; - for stdin)");
  app->add_option("--corpus", o.corpus, "built-in graph: fig1, fig2, fig3");
  app->add_flag("--strict", o.strict, "require every edge endpoint to be declared first");
}

void add_json(CLI::App* app, Options& o) { app->add_option("--json", o.json, "write the JSON report here (- for stdout)"); }

void add_field(CLI::App* app, Options& o) { app->add_option("--field", o.field, "coefficient field: q, f2, fp:<p>"); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Squarefree powers of edge ideals: matchings, Betti tables, regularity checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* analyze = app.add_subcommand("analyze", "invariants, aim(G,k) and reg(I(G)^[k]) of a graph");
  add_graph_source(analyze, o);
  analyze->add_option("--k", o.k, "report the full Betti table of I(G)^[k]");
  add_field(analyze, o);
  add_json(analyze, o);

  auto* betti = app.add_subcommand("betti", "graded Betti table of I(G)^[k]");
  add_graph_source(betti, o);
  betti->add_option("--k", o.k, "power (default 1)");
  add_field(betti, o);
  add_json(betti, o);

  auto* aim = app.add_subcommand("aim", "k-admissable matching numbers with witnesses");
  add_graph_source(aim, o);
  aim->add_option("--k", o.k, "single k (default: 1..mat)");
  add_json(aim, o);

  auto* verify = app.add_subcommand("verify", "check statements on one graph");
  add_graph_source(verify, o);
  verify->add_option("--k", o.k, "single k (default: every relevant k)");
  verify->add_option("--statement", o.statements, "statement ids (default: all)")->delimiter(',');
  add_field(verify, o);
  add_json(verify, o);

  auto* fz = app.add_subcommand("fuzz", "check statements on seeded random graphs");
  fz->add_option("--n-max", o.n_max, "largest vertex count (<= 20)");
  fz->add_option("--n-min", o.n_min, "smallest vertex count");
  fz->add_option("--trials", o.trials, "number of random graphs");
  fz->add_option("--seed", o.seed, "base seed");
  fz->add_option("--statement", o.statements, "statement ids (default: all)")->delimiter(',');
  fz->add_flag("--any-graph", o.any_graph, "random graphs instead of forests");
  fz->add_flag("--single-field", o.single_field, "skip the second-field comparison of Betti tables");
  fz->add_option("--threads", o.threads, "worker threads (0: hardware)");
  add_field(fz, o);
  add_json(fz, o);

  auto* gen = app.add_subcommand("gen", "print a generated graph");
  gen->add_option("--kind", o.kind, "forest, graph or cameron-walker");
  gen->add_option("--n", o.n, "vertex count (forest, graph)");
  gen->add_option("--m", o.m, "matching number (cameron-walker)");
  gen->add_option("--seed", o.seed, "seed");
  add_json(gen, o);

  auto* corp = app.add_subcommand("corpus", "built-in example graphs");
  corp->add_option("action", o.action, "list or show");
  corp->add_option("name", o.name, "graph name for show");
  add_json(corp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*betti) return cmd_betti(o, out);
    if (*aim) return cmd_aim(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*fz) return cmd_fuzz(o, out);
    if (*gen) return cmd_gen(o, out);
    return cmd_corpus(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sqpow::cli
