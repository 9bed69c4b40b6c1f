// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "sqpow/betti.hpp"
#include "sqpow/corpus.hpp"
#include "sqpow/generators.hpp"
#include "sqpow/graph_io.hpp"
#include "sqpow/verify.hpp"

using namespace sqpow;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Tally {
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  std::string first_failure;

  void add(const Verdict& v) {
    if (v.outcome == sqpow::Outcome::pass) ++pass;
    if (v.outcome == sqpow::Outcome::inapplicable) ++inapplicable;
    if (v.outcome == sqpow::Outcome::fail) {
      if (fail++ == 0) first_failure = to_json(v).dump();
    }
  }
  std::string summary(const std::string& id) const {
    std::string s = id + " " + std::to_string(pass) + " pass / " + std::to_string(fail) + " fail";
    if (fail) s += " first: " + first_failure;
    return s;
  }
};

Json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "sqpow");
  args.emplace_back("--json");
  args.emplace_back("-");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return Json();
  return Json::parse(out.str());
}

/// Forests with at most 14 vertices and mat >= 2, from fixed seeds.
std::vector<Graph> forest_corpus() {
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; out.size() < 200; ++seed) {
    Rng rng(derive_seed(2024, seed));
    Graph f = gen_random_forest(rng.between(4, 14), derive_seed(7, seed));
    if (matching_number(f) >= 2) out.push_back(std::move(f));
  }
  return out;
}

struct Harness {
  std::vector<CheckContext> forests;
  int failures = 0;

  void run(const std::string& id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
      o.ok = false;
      o.note += " [over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit]";
    }
    failures += o.ok ? 0 : 1;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << time.str() << " s)  " << o.note
              << std::endl;
  }

  /// Runs `statement` on every forest of the corpus for every candidate k.
  Tally sweep(const std::string& statement) {
    Tally t;
    const StatementInfo& info = statement_info(statement);
    for (CheckContext& ctx : forests) {
      for (int k : candidate_ks(info, ctx)) t.add(check(statement, ctx, k));
    }
    return t;
  }
};

Outcome corpus_reproduction() {
  Outcome o;
  std::ostringstream note;
  const Json fig2 = cli_json({"analyze", "--corpus", "fig2"});
  std::vector<int> aims;
  for (const auto& e : fig2["aim"]) aims.push_back(e["aim"].get<int>());
  const bool f2 = fig2["mat"] == 6 && fig2["indm"] == 3 && aims == std::vector<int>{3, 4, 5, 6, 6, 6};
  note << "fig2 mat=" << fig2["mat"] << " indm=" << fig2["indm"] << " aim=";
  for (std::size_t i = 0; i < aims.size(); ++i) note << (i ? "," : "") << aims[i];

  const Json fig1 = cli_json({"analyze", "--corpus", "fig1"});
  const bool f1 = fig1["mat"] == 2 && fig1["indm"] == 2;
  note << "; fig1 mat=" << fig1["mat"] << " indm=" << fig1["indm"];

  const Json fig3 = cli_json({"analyze", "--corpus", "fig3"});
  const bool f3 = fig3["distant_leaves"] == Json::array({"x4", "x6"}) && fig3["aim"][1]["aim"] == 2;
  note << "; fig3 distant leaves=" << fig3["distant_leaves"].dump() << " aim(G,2)=" << fig3["aim"][1]["aim"];
  o.ok = f1 && f2 && f3;
  o.note = note.str();
  return o;
}

Outcome second_power(Harness& h) {
  CheckContext fig2(corpus_graph("fig2"));
  const Verdict v = check("THM-4.10", fig2, 2);
  Tally t = h.sweep("THM-4.10");
  const bool ok = v.outcome == sqpow::Outcome::pass && t.fail == 0 && t.pass == static_cast<int>(h.forests.size());
  return {ok, "fig2 reg=" + v.lhs.dump() + " aim+2=" + v.rhs.dump() + "; " + std::to_string(h.forests.size()) +
                  " forests, " + t.summary("THM-4.10")};
}

Outcome upper_bound(Harness& h) {
  Tally t = h.sweep("THM-4.6");
  Tally conj = h.sweep("CONJ-4.13");
  const int instances = conj.pass + conj.fail;
  std::ostringstream note;
  note << t.summary("THM-4.6") << "; equality reg = aim + k on " << conj.pass << "/" << instances
       << " instances (informational)";
  return {t.fail == 0 && t.pass > 0, note.str()};
}

Outcome linearity(Harness& h) {
  Tally a = h.sweep("THM-5.8");
  Tally b = h.sweep("COR-5.9");
  return {a.fail == 0 && b.fail == 0 && a.pass > 0 && b.pass > 0, a.summary("THM-5.8") + "; " + b.summary("COR-5.9")};
}

Outcome top_power(Harness& h) {
  Tally forests = h.sweep("THM-2.4");
  Tally others;
  int graphs = 0;
  for (std::uint64_t seed = 0; graphs < 60; ++seed) {
    Rng rng(derive_seed(99, seed));
    const Graph g = gen_random_graph(rng.between(4, 12), 1, 3, derive_seed(100, seed));
    if (is_forest(g) || matching_number(g) < 1) continue;
    ++graphs;
    CheckContext ctx(g);
    others.add(check("THM-2.4", ctx, matching_number(g)));
  }
  const bool ok = forests.fail == 0 && others.fail == 0 && others.pass == graphs &&
                  forests.pass == static_cast<int>(h.forests.size());
  return {ok, "forests: " + forests.summary("THM-2.4") + "; " + std::to_string(graphs) +
                  " non-forests: " + others.summary("THM-2.4")};
}

Outcome colon_identity(Harness& h) {
  Tally t = h.sweep("LEM-4.4");
  int zero_cases = 0;
  for (CheckContext& ctx : h.forests) zero_cases += leaves(ctx.graph()).empty() ? 0 : 1;  // k = mat + 1
  return {t.fail == 0 && t.pass > 0,
          t.summary("LEM-4.4") + " (each verdict covers every leaf edge; " + std::to_string(zero_cases) +
              " verdicts at k = mat + 1 compare zero ideals)"};
}

Outcome oracle_equivalence() {
  int ideals = 0, compared = 0, nonzero = 0, discrepancies = 0, most_generators = 0;
  for (std::uint64_t seed = 0; ideals < 120; ++seed) {
    Rng rng(derive_seed(555, seed));
    const SquarefreeIdeal i = gen_random_ideal(rng.between(3, 10), rng.between(1, 14), rng.between(2, 3), 5, seed);
    if (i.num_generators() > 10) continue;
    ++ideals;
    most_generators = std::max(most_generators, i.num_generators());
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
      const BettiTable hochster = betti_table(i, f);
      const BettiTable taylor = taylor_betti_table(i, f);
      // Entry-for-entry, including every multidegree below the lcm.
      for_each_subset(lcm_of_generators(i), [&](VertexSet alpha) {
        for (int d = 0; d <= i.num_generators(); ++d) {
          ++compared;
          nonzero += hochster.at(d, alpha) != 0 ? 1 : 0;
          if (hochster.at(d, alpha) != taylor.at(d, alpha)) ++discrepancies;
        }
      });
    }
  }
  return {discrepancies == 0, std::to_string(ideals) + " ideals over q and f2, " + std::to_string(compared) +
                                  " (i, alpha) cells (" + std::to_string(nonzero) +
                                  " nonzero), up to " + std::to_string(most_generators) + " generators, " +
                                  std::to_string(discrepancies) + " discrepancies"};
}

Outcome nonvanishing(Harness& h) {
  std::vector<CheckContext> figs;
  for (const auto& e : corpus()) figs.emplace_back(e.graph);
  std::string note;
  bool ok = true;
  for (const char* id : {"LEM-4.8", "LEM-4.9", "LEM-5.7"}) {
    Tally t = h.sweep(id);
    const StatementInfo& info = statement_info(id);
    for (CheckContext& ctx : figs) {
      for (int k : candidate_ks(info, ctx)) t.add(check(id, ctx, k));
    }
    ok = ok && t.fail == 0 && t.pass > 0;
    note += (note.empty() ? "" : "; ") + t.summary(id);
  }
  return {ok, note};
}

Outcome admissability_oracle() {
  int graphs = 0, matchings = 0, decisions = 0, disagreements = 0;
  for (std::uint64_t seed = 0; graphs < 100; ++seed) {
    Rng rng(derive_seed(31337, seed));
    const int n = rng.between(2, 10);
    const Graph g = seed % 2 ? gen_random_forest(n, seed) : gen_random_graph(n, 1, 3, seed);
    ++graphs;
    for (int size = 1; size <= 6; ++size) {
      for (const auto& idx : oracle::matchings(g, size)) {
        ++matchings;
        const auto edges = oracle::to_edges(g, idx);
        for (int k = 1; k <= size + 1; ++k) {
          ++decisions;
          if (is_k_admissable(g, Matching(edges), k).has_value() != oracle::admissable(g, edges, k)) ++disagreements;
        }
      }
    }
  }
  return {disagreements == 0, std::to_string(graphs) + " graphs, " + std::to_string(matchings) + " matchings, " +
                                  std::to_string(decisions) + " (M, k) decisions, " + std::to_string(disagreements) +
                                  " disagreements"};
}

Outcome determinism(const std::string& binary) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("sqpow_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands{
      "analyze --corpus fig2",
      "analyze --corpus fig1 --k 2 --field f2",
      "betti --corpus fig2 --k 3",
      "aim --corpus fig2",
      "verify --corpus fig2",
      "fuzz --n-max 10 --trials 50 --seed 42",
      "fuzz --n-max 9 --trials 20 --seed 7 --any-graph --threads 2",
      "gen --kind forest --n 12 --seed 42",
      "gen --kind cameron-walker --m 4 --seed 3",
      "corpus list",
  };
  int identical = 0;
  std::string note;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::string payload[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run" + std::to_string(c) + "_" + std::to_string(rep) + ".json");
      const std::string cmd = "\"" + binary + "\" " + commands[c] + " --json \"" + out.string() + "\" > /dev/null";
      if (std::system(cmd.c_str()) != 0) note += " [" + commands[c] + " exited nonzero]";
      std::ifstream in(out, std::ios::binary);
      payload[rep].assign(std::istreambuf_iterator<char>(in), {});
    }
    if (!payload[0].empty() && payload[0] == payload[1]) {
      ++identical;
    } else {
      note += " [" + commands[c] + " differs]";
    }
  }
  fs::remove_all(dir);
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " commands byte-identical across two processes" + note};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : SQPOW_BINARY;
  Harness h;
  for (Graph& g : forest_corpus()) h.forests.emplace_back(std::move(g));

  h.run("C1", "corpus reproduction", 10, corpus_reproduction);
  h.run("C2", "reg(I^[2]) = aim(G,2) + 2 on fig2 and 200 forests", 300, [&] { return second_power(h); });
  h.run("C3", "reg(I^[k]) <= aim(G,k) + k", 0, [&] { return upper_bound(h); });
  h.run("C4", "linearity characterization and persistence", 0, [&] { return linearity(h); });
  h.run("C5", "I(G)^[mat] has a linear resolution", 0, [&] { return top_power(h); });
  h.run("C6", "I(G)^[k] : (xy) = I(G - {x,y})^[k-1] at leaf edges", 0, [&] { return colon_identity(h); });
  h.run("C7", "Hochster and Taylor Betti numbers agree", 300, oracle_equivalence);
  h.run("C8", "non-vanishing Betti numbers and disconnected complexes", 0, [&] { return nonvanishing(h); });
  h.run("C9", "finest-partition admissability matches partition enumeration", 0, admissability_oracle);
  h.run("C10", "byte-identical JSON across repeated runs", 0, [&] { return determinism(binary); });

  std::cout << (h.failures == 0 ? "all criteria passed" : std::to_string(h.failures) + " criteria failed") << std::endl;
  return h.failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
