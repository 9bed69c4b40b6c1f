#ifndef SQPOW_GENERATORS_HPP
#define SQPOW_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sqpow/graph.hpp"
#include "sqpow/monomial_ideal.hpp"

namespace sqpow {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break reproducible
/// reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index (SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random labeled forest on vertices x1..xn: the vertices are shuffled and cut
/// into random blocks, and each block becomes a uniformly random labeled tree
/// (decoded from a random Prüfer sequence). Deterministic per seed.
Graph gen_random_forest(int n, std::uint64_t seed);

/// Erdős–Rényi style graph on x1..xn with edge probability num/den.
Graph gen_random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Forest with indm = mat = m. Candidates are random trees built from m hubs,
/// each carrying at least one pendant leaf, joined through connector vertices
/// adjacent only to hubs; every candidate is certified with the matchings
/// module before it is returned. Throws GenerationError when the attempt
/// budget runs out.
Graph gen_cameron_walker(int m, std::uint64_t seed);

/// Random squarefree ideal with at most `max_gens` generators on `num_vars`
/// variables, generator degrees in [min_degree, max_degree] (clamped to num_vars).
SquarefreeIdeal gen_random_ideal(int num_vars, int max_gens, int min_degree, int max_degree, std::uint64_t seed);

}  // namespace sqpow

#endif  // SQPOW_GENERATORS_HPP
