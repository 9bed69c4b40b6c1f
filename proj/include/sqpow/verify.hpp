#ifndef SQPOW_VERIFY_HPP
#define SQPOW_VERIFY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqpow/betti.hpp"
#include "sqpow/graph.hpp"
#include "sqpow/json.hpp"
#include "sqpow/matchings.hpp"
#include "sqpow/monomial_ideal.hpp"

namespace sqpow {

/// Instance too large for the requested computation.
class CapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kBettiVertexCap = 16;
inline constexpr int kMatchingVertexCap = 22;

struct StatementInfo {
  std::string_view id;
  std::string_view claim;
  /// Whether the check is parameterized by k.
  bool uses_k;
  /// Whether the check needs Betti numbers (and so the smaller size cap).
  bool needs_betti;
  /// Open statement: reported, never counted as a defect.
  bool conjecture;
};

std::span<const StatementInfo> statements();
/// Throws std::invalid_argument for an unknown id.
const StatementInfo& statement_info(std::string_view id);

enum class Outcome { pass, fail, inapplicable };
std::string_view to_string(Outcome o);

struct Verdict {
  std::string statement;
  int k = 0;
  Outcome outcome = Outcome::inapplicable;
  Json lhs;
  Json rhs;
  std::string detail;
  /// Auxiliary witnesses (leaves, matchings, ...) when relevant.
  Json witness;
  /// {"statement", "graph", "k", "field", "seed"}; enough to re-run the check.
  Json reproducer;
};

Json to_json(const Verdict& v);

/// Memoized invariants of one graph, shared between checks on it. Not
/// thread-safe.
class CheckContext {
 public:
  explicit CheckContext(Graph g, FieldSpec field = FieldSpec::rationals(), std::optional<std::uint64_t> seed = {},
                        BettiOptions betti = {});

  const Graph& graph() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  const BettiOptions& betti_options() const { return betti_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  bool forest();
  int mat();
  int indm();
  int aim(int k);
  const std::optional<Matching>& aim_witness(int k);
  const SquarefreeIdeal& power(int k);
  /// Throws CapError above the Betti cap and std::domain_error on the zero ideal.
  const BettiTable& table(int k);
  int reg(int k) { return table(k).regularity(); }
  bool linear(int k);

 private:
  Graph graph_;
  FieldSpec field_;
  std::optional<std::uint64_t> seed_;
  BettiOptions betti_;
  std::optional<bool> forest_;
  std::optional<int> mat_, indm_;
  std::map<int, std::optional<Matching>> witness_;
  std::map<int, SquarefreeIdeal> powers_;
  std::map<int, BettiTable> tables_;
};

/// Range of k worth trying for a statement on this graph: 1..mat+1 for
/// k-parameterized statements (the top value exercises the zero-ideal cases),
/// {0} otherwise.
std::vector<int> candidate_ks(const StatementInfo& info, CheckContext& ctx);

/// Checks one statement on (ctx.graph(), k). Throws std::invalid_argument for
/// an unknown id and CapError when the graph exceeds the statement's cap.
Verdict check(std::string_view id, CheckContext& ctx, int k);
Verdict check(std::string_view id, const Graph& g, int k, const FieldSpec& field = FieldSpec::rationals());

struct FuzzConfig {
  int n_min = 2;
  int n_max = 10;
  int trials = 200;
  std::uint64_t seed = 42;
  FieldSpec field = FieldSpec::rationals();
  /// Empty means every statement.
  std::vector<std::string> statements;
  bool forest_only = true;
  /// Recompute every Betti table over a second field and flag disagreements.
  bool cross_field = true;
  /// Trial workers; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws std::invalid_argument on an invalid configuration.
  void validate() const;
};

struct StatementTally {
  std::string id;
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  /// Instances above the statement's size cap.
  int skipped = 0;
  std::vector<Json> failures;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<StatementTally> statements;
  /// reg - (aim + k) over forest instances, keyed by slack.
  std::map<int, int> slack_histogram;
  std::vector<Json> field_disagreements;

  /// No failure of a proved statement, no positive slack, no field disagreement.
  bool ok() const;
  Json to_json() const;
};

FuzzReport fuzz(const FuzzConfig& config);

/// The graph of trial t.
Graph fuzz_graph(const FuzzConfig& config, int trial, std::uint64_t* trial_seed = nullptr);

}  // namespace sqpow

#endif  // SQPOW_VERIFY_HPP
