#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqpow/corpus.hpp"
#include "sqpow/generators.hpp"
#include "sqpow/graph_io.hpp"
#include "sqpow/verify.hpp"

using namespace sqpow;

TEST_CASE("statement registry") {
  CHECK(statements().size() == 16);
  CHECK(statement_info("CONJ-4.13").conjecture);
  CHECK_FALSE(statement_info("LEM-4.3").uses_k);
  CHECK_THROWS_AS(statement_info("THM-9.9"), std::invalid_argument);
  CHECK_THROWS_AS(check("THM-9.9", corpus_graph("fig1"), 1), std::invalid_argument);
}

TEST_CASE("corpus verdicts") {
  const Verdict v = check("THM-4.10", corpus_graph("fig2"), 2);
  CHECK(v.outcome == Outcome::pass);
  CHECK(v.lhs == 6);
  CHECK(v.rhs == 6);

  const Verdict w = check("THM-5.8", corpus_graph("fig1"), 2);
  CHECK(w.outcome == Outcome::pass);
  CHECK(w.lhs["reg"] == 4);
  CHECK(w.rhs["aim"] == 2);

  CHECK(check("LEM-4.4", parse_graph("a b\nb c\nc a\n"), 2).outcome == Outcome::inapplicable);
  CHECK(check("LEM-4.4", corpus_graph("fig3"), 2).outcome == Outcome::pass);
  CHECK(check("THM-4.6", parse_graph("a b\nb c\nc a\nc d\n"), 1).outcome == Outcome::inapplicable);
  CHECK(check("THM-4.10", parse_graph("a b\n"), 2).outcome == Outcome::inapplicable);
  CHECK(check("LEM-4.3", parse_graph("a b\n"), 0).outcome == Outcome::pass);

  for (const auto& entry : corpus()) {
    CheckContext ctx(entry.graph);
    for (const auto& info : statements()) {
      for (int k : candidate_ks(info, ctx)) {
        const Verdict r = check(info.id, ctx, k);
        CHECK_MESSAGE(r.outcome != Outcome::fail, entry.name, " ", info.id, " k=", k);
      }
    }
  }
}

TEST_CASE("size caps") {
  const Graph big = gen_random_forest(17, 1);
  CHECK_THROWS_AS(check("THM-4.6", big, 1), CapError);
  CHECK_NOTHROW(check("LEM-3.5", big, 2));
  CHECK_THROWS_AS(check("LEM-3.5", gen_random_forest(23, 1), 2), CapError);
}

TEST_CASE("verdicts are reproducible from their reproducers") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_forest(10, seed);
    for (const auto& info : statements()) {
      const Verdict v = check(info.id, g, 2);
      const Json& rep = v.reproducer;
      const Verdict again = check(rep["statement"].get<std::string>(), parse_graph_json(rep["graph"]),
                                  rep["k"].get<int>(), FieldSpec::parse(rep["field"].get<std::string>()));
      CHECK(to_json(again).dump() == to_json(v).dump());
    }
  }
}

TEST_CASE("Cameron-Walker forests") {
  const Graph one = gen_cameron_walker(1, 3);
  CHECK(matching_number(one) == 1);
  CHECK(induced_matching_number(one) == 1);
  CHECK_THROWS_AS(gen_cameron_walker(0, 1), std::invalid_argument);
  for (int m = 1; m <= 5; ++m) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = gen_cameron_walker(m, seed);
      CHECK(is_forest(g));
      CHECK(matching_number(g) == m);
      CHECK(induced_matching_number(g) == m);
      if (g.num_vertices() > kBettiVertexCap) continue;
      for (int k = 1; k <= m; ++k) CHECK(check("PROP-4.12", g, k).outcome == Outcome::pass);
    }
  }
}

TEST_CASE("fuzz configuration") {
  FuzzConfig cfg;
  cfg.n_max = 21;
  CHECK_THROWS_AS(fuzz(cfg), std::invalid_argument);
  cfg.n_max = 8;
  cfg.trials = 0;
  CHECK_THROWS_AS(fuzz(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.statements = {"NOPE"};
  CHECK_THROWS_AS(fuzz(cfg), std::invalid_argument);
}

TEST_CASE("fuzzing forests finds no failures") {
  FuzzConfig cfg;
  cfg.n_max = 10;
  cfg.trials = 200;
  cfg.seed = 42;
  const FuzzReport report = fuzz(cfg);
  CHECK(report.ok());
  for (const auto& t : report.statements) {
    CHECK_MESSAGE(t.fail == 0, t.id);
    CHECK(t.skipped == 0);
    CHECK(t.pass + t.fail > 0);
  }
  // reg <= aim + k everywhere.
  REQUIRE_FALSE(report.slack_histogram.empty());
  CHECK(report.slack_histogram.rbegin()->first <= 0);
  CHECK(report.field_disagreements.empty());
}

TEST_CASE("fuzzing general graphs") {
  FuzzConfig cfg;
  cfg.n_max = 9;
  cfg.trials = 60;
  cfg.seed = 9;
  cfg.forest_only = false;
  cfg.statements = {"COR-4.11", "THM-2.4", "LEM-4.4", "LEM-3.5", "LEM-3.8", "LEM-4.8", "LEM-4.9", "LEM-5.7", "COR-2.6"};
  const FuzzReport report = fuzz(cfg);
  CHECK(report.ok());
  CHECK(report.statements.front().id == "COR-4.11");
  CHECK(report.statements.front().pass > 0);
}

TEST_CASE("single-edge fuzz trial") {
  FuzzConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 2;
  cfg.trials = 1;
  for (cfg.seed = 0; fuzz_graph(cfg, 0).num_edges() != 1; ++cfg.seed) {
  }
  cfg.statements = {"THM-4.10", "LEM-4.3"};
  const FuzzReport report = fuzz(cfg);
  CHECK(report.statements[0].pass == 0);
  CHECK(report.statements[0].inapplicable > 0);
  CHECK(report.statements[1].pass == 1);
}

TEST_CASE("fuzz reports are deterministic") {
  FuzzConfig cfg;
  cfg.n_max = 9;
  cfg.trials = 30;
  cfg.seed = 1234;
  cfg.threads = 1;
  const std::string a = fuzz(cfg).to_json().dump();
  cfg.threads = 3;
  const std::string b = fuzz(cfg).to_json().dump();
  CHECK(a == b);
  CHECK(a.find("conjecture_slack_histogram") != std::string::npos);
}
