#include <algorithm>
#include <atomic>
#include <thread>

#include "sqpow/generators.hpp"
#include "sqpow/graph_io.hpp"
#include "sqpow/report.hpp"
#include "sqpow/verify.hpp"

namespace sqpow {

void FuzzConfig::validate() const {
  if (n_max > 20) throw std::invalid_argument("fuzz: n-max is capped at 20");
  if (n_min < 0 || n_min > n_max) throw std::invalid_argument("fuzz: need 0 <= n-min <= n-max");
  if (trials < 1) throw std::invalid_argument("fuzz: trials must be at least 1");
  for (const auto& id : statements) statement_info(id);
}

Graph fuzz_graph(const FuzzConfig& config, int trial, std::uint64_t* trial_seed) {
  const std::uint64_t s = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
  if (trial_seed) *trial_seed = s;
  Rng rng(s);
  const int n = rng.between(config.n_min, config.n_max);
  return config.forest_only ? gen_random_forest(n, derive_seed(s, 1)) : gen_random_graph(n, 1, 3, derive_seed(s, 1));
}

namespace {

struct TrialResult {
  std::vector<std::vector<Verdict>> verdicts;  // per selected statement
  std::vector<int> skipped;                    // per selected statement
  std::vector<int> slacks;
  std::vector<Json> disagreements;
};

FieldSpec second_field(const FieldSpec& f) {
  return f.kind() == FieldSpec::Kind::rational ? FieldSpec::prime(2) : FieldSpec::rationals();
}

TrialResult run_trial(const FuzzConfig& config, const std::vector<const StatementInfo*>& selected, int trial) {
  std::uint64_t seed = 0;
  const Graph g = fuzz_graph(config, trial, &seed);
  BettiOptions betti;
  betti.threads = 1;
  CheckContext ctx(g, config.field, seed, betti);
  TrialResult out;
  out.verdicts.resize(selected.size());
  out.skipped.resize(selected.size());
  for (std::size_t s = 0; s < selected.size(); ++s) {
    const StatementInfo& info = *selected[s];
    for (int k : candidate_ks(info, ctx)) {
      try {
        Verdict v = check(info.id, ctx, k);
        if (info.id == "CONJ-4.13" && v.outcome != Outcome::inapplicable) out.slacks.push_back(v.witness["slack"].get<int>());
        out.verdicts[s].push_back(std::move(v));
      } catch (const CapError&) {
        ++out.skipped[s];
      }
    }
  }
  if (config.cross_field && g.num_vertices() <= kBettiVertexCap) {
    const FieldSpec other = second_field(config.field);
    for (int k = 1; k <= ctx.mat(); ++k) {
      const BettiTable there = betti_table(ctx.power(k), other, betti);
      if (there.entries() != ctx.table(k).entries()) {
        out.disagreements.push_back({{"graph", to_json(g)},
                                     {"k", k},
                                     {"seed", seed},
                                     {"fields", {config.field.to_string(), other.to_string()}}});
      }
    }
  }
  return out;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
  config.validate();
  std::vector<const StatementInfo*> selected;
  for (const auto& info : statements()) {
    const bool wanted = config.statements.empty() ||
                        std::find(config.statements.begin(), config.statements.end(), info.id) != config.statements.end();
    if (wanted) selected.push_back(&info);
  }

  std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
  unsigned workers = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.trials));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int t = next++; t < config.trials; t = next++) results[static_cast<std::size_t>(t)] = run_trial(config, selected, t);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Merge in trial order so the report does not depend on scheduling.
  FuzzReport report;
  report.config = config;
  for (const auto* info : selected) {
    StatementTally tally;
    tally.id = std::string(info->id);
    report.statements.push_back(std::move(tally));
  }
  for (const TrialResult& r : results) {
    for (std::size_t s = 0; s < selected.size(); ++s) {
      StatementTally& tally = report.statements[s];
      tally.skipped += r.skipped[s];
      for (const Verdict& v : r.verdicts[s]) {
        switch (v.outcome) {
          case Outcome::pass:
            ++tally.pass;
            break;
          case Outcome::fail:
            ++tally.fail;
            tally.failures.push_back(v.reproducer);
            break;
          case Outcome::inapplicable:
            ++tally.inapplicable;
            break;
        }
      }
    }
    for (int slack : r.slacks) ++report.slack_histogram[slack];
    report.field_disagreements.insert(report.field_disagreements.end(), r.disagreements.begin(), r.disagreements.end());
  }
  return report;
}

bool FuzzReport::ok() const {
  for (const auto& t : statements) {
    if (t.fail > 0 && !statement_info(t.id).conjecture) return false;
  }
  if (!slack_histogram.empty() && slack_histogram.rbegin()->first > 0) return false;
  return field_disagreements.empty();
}

Json FuzzReport::to_json() const {
  Json cfg;
  cfg["n_min"] = config.n_min;
  cfg["n_max"] = config.n_max;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["field"] = config.field.to_string();
  cfg["statements"] = config.statements;
  cfg["forest_only"] = config.forest_only;
  cfg["cross_field"] = config.cross_field;

  Json stmts = Json::array();
  for (const auto& t : statements) {
    Json s;
    s["id"] = t.id;
    s["pass"] = t.pass;
    s["fail"] = t.fail;
    s["inapplicable"] = t.inapplicable;
    s["skipped"] = t.skipped;
    s["failures"] = t.failures;
    stmts.push_back(std::move(s));
  }
  Json hist = Json::object();
  int equal = 0, total = 0;
  for (const auto& [slack, count] : slack_histogram) {
    hist[std::to_string(slack)] = count;
    total += count;
    if (slack == 0) equal = count;
  }
  Json out;
  out["config"] = std::move(cfg);
  out["statements"] = std::move(stmts);
  out["conjecture_slack_histogram"] = std::move(hist);
  out["conjecture_equality"] = {{"equal", equal}, {"instances", total}};
  out["field_disagreements"] = field_disagreements;
  out["ok"] = ok();
  return out;
}

}  // namespace sqpow
