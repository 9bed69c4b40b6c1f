#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sqpow/json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sqpow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sqpow::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

sqpow::Json run_json(std::vector<std::string> args) {
  args.emplace_back("--json");
  args.emplace_back("-");
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return sqpow::Json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze reproduces the corpus numbers") {
  const auto fig2 = run_json({"analyze", "--corpus", "fig2", "--k", "2"});
  CHECK(fig2["mat"] == 6);
  CHECK(fig2["indm"] == 3);
  std::vector<int> aims;
  for (const auto& e : fig2["aim"]) aims.push_back(e["aim"].get<int>());
  CHECK(aims == std::vector<int>{3, 4, 5, 6, 6, 6});
  CHECK(fig2["powers"][0]["regularity"] == 6);
  CHECK(fig2["powers"][0]["betti"]["regularity"] == 6);

  const auto fig1 = run_json({"analyze", "--corpus", "fig1"});
  CHECK(fig1["mat"] == 2);
  CHECK(fig1["indm"] == 2);

  const auto fig3 = run_json({"analyze", "--corpus", "fig3"});
  CHECK(fig3["distant_leaves"] == sqpow::Json::array({"x4", "x6"}));
  CHECK(fig3["aim"][1]["aim"] == 2);
}

TEST_CASE("text reports") {
  const Result r = run({"betti", "--corpus", "fig3", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total:") != std::string::npos);
  CHECK(r.out.find("linear resolution: yes") != std::string::npos);
  const Result list = run({"corpus", "list"});
  CHECK(list.out.find("fig2   13 vertices  12 edges") != std::string::npos);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--corpus", "fig3", "--statement", "LEM-4.4", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
  const auto all = run_json({"verify", "--corpus", "fig1"});
  CHECK(all["verdicts"].size() > 16);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--corpus", "nope"}).code == 2);
  CHECK(run({"analyze", "--corpus", "fig1", "--input", "x"}).code == 2);
  CHECK(run({"analyze", "--input", "/nonexistent/graph.txt"}).code == 2);
  CHECK(run({"betti", "--corpus", "fig1", "--k", "3"}).code == 2);
  CHECK(run({"betti", "--corpus", "fig1", "--field", "fp:4"}).code == 2);
  CHECK(run({"verify", "--corpus", "fig1", "--statement", "XYZ"}).code == 2);
  CHECK(run({"fuzz", "--n-max", "30", "--trials", "1"}).code == 2);
  CHECK(run({"corpus", "show"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::string path = "sqpow_cli_test_graph.txt";
  {
    std::ofstream f(path);
    f << "a b\nb b\n";
  }
  const Result bad = run({"analyze", "--input", path});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::remove(path.c_str());

  std::vector<std::string> big{"analyze", "--input", "sqpow_cli_big.txt", "--k", "1"};
  {
    std::ofstream f("sqpow_cli_big.txt");
    for (int i = 1; i < 18; ++i) f << "v" << i << " v" << i + 1 << "\n";
  }
  CHECK(run(big).code == 2);
  std::remove("sqpow_cli_big.txt");
}

TEST_CASE("graph input round trip") {
  const Result shown = run({"corpus", "show", "fig3"});
  const std::string path = "sqpow_cli_fig3.txt";
  {
    std::ofstream f(path);
    f << shown.out;
  }
  const auto a = run_json({"analyze", "--input", path});
  const auto b = run_json({"analyze", "--corpus", "fig3"});
  CHECK(a.dump() == b.dump());
  std::remove(path.c_str());
}

TEST_CASE("identical invocations give identical JSON") {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", "--corpus", "fig2"},
      {"betti", "--corpus", "fig2", "--k", "3", "--field", "f2"},
      {"aim", "--corpus", "fig2"},
      {"verify", "--corpus", "fig3"},
      {"fuzz", "--n-max", "8", "--trials", "20", "--seed", "5"},
      {"gen", "--kind", "cameron-walker", "--m", "3", "--seed", "11"},
      {"corpus", "list"},
  };
  for (const auto& c : commands) CHECK(run_json(c).dump() == run_json(c).dump());
}

TEST_CASE("fuzz exit status") {
  const Result r = run({"fuzz", "--n-max", "8", "--trials", "10", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}
