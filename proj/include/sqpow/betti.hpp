#ifndef SQPOW_BETTI_HPP
#define SQPOW_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqpow/field.hpp"
#include "sqpow/monomial_ideal.hpp"
#include "sqpow/simplicial_complex.hpp"

namespace sqpow {

struct BettiEntry {
  int i = 0;
  VertexSet alpha;
  std::size_t dim = 0;
  bool operator==(const BettiEntry&) const = default;
};

/// Multigraded Betti numbers b_{i,α}(I) of an ideal (not of S/I), indexed by
/// homological degree i and squarefree multidegree α. Only nonzero entries
/// are stored.
class BettiTable {
 public:
  BettiTable(VertexNames ambient, FieldSpec field) : ambient_(std::move(ambient)), field_(field) {}

  void set(int i, VertexSet alpha, std::size_t dim);
  std::size_t at(int i, VertexSet alpha) const;

  /// Entries ordered by i, then |α|, then α lexicographically.
  std::vector<BettiEntry> entries() const;
  /// b_{i,j} = sum of b_{i,α} over |α| = j, keyed by (i, j).
  std::map<std::pair<int, int>, std::size_t> graded() const;
  std::size_t graded(int i, int j) const;
  /// b_{i,j}(S/I) = b_{i-1,j}(I) for i >= 1.
  std::size_t graded_quotient(int i, int j) const;

  /// max(|α| - i) over nonzero entries. Throws std::domain_error when empty.
  int regularity() const;
  int projective_dimension() const;
  bool empty() const { return entries_.empty(); }

  const FieldSpec& field() const { return field_; }
  const VertexNames& ambient() const { return ambient_; }

  bool operator==(const BettiTable& o) const { return field_ == o.field_ && entries_ == o.entries_; }

 private:
  struct Key {
    int i;
    VertexSet alpha;
    bool operator<(const Key& o) const {
      if (i != o.i) return i < o.i;
      if (alpha.size() != o.alpha.size()) return alpha.size() < o.alpha.size();
      return lex_less(alpha, o.alpha);
    }
    bool operator==(const Key&) const = default;
  };

  VertexNames ambient_;
  FieldSpec field_;
  std::map<Key, std::size_t> entries_;
};

/// How the homology of K^α(I) is computed.
enum class HomologyMethod {
  /// Materialize K^α(I) and take ranks of every boundary map.
  full_complex,
  /// Pick a vertex v of K^α(I) and compute the homology of the pair
  /// (deletion of v, link of v), which is isomorphic to H̃(K^α(I)) because
  /// the star of v is a cone. Only faces W with v ∉ W and W ∪ {v} ∉ K enter.
  vertex_reduced,
};

struct BettiOptions {
  HomologyMethod method = HomologyMethod::vertex_reduced;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// K^α(I) = {W ⊆ α : x^α / x^W ∈ I}. Void when x^α ∉ I.
SimplicialComplex upper_koszul(const SquarefreeIdeal& ideal, VertexSet alpha);

/// b_{i,α}(I) = dim H̃_{i-1}(K^α(I)) for every α ⊆ lcm(I). Throws
/// std::domain_error on the zero ideal.
BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});

/// b_{i,α}(I) for one multidegree, keyed by i (nonzero values only).
std::map<int, std::size_t> multigraded_betti(const SquarefreeIdeal& ideal, VertexSet alpha, const FieldSpec& field,
                                             HomologyMethod method = HomologyMethod::vertex_reduced);

/// reg(I). Throws std::domain_error on the zero ideal.
int regularity(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});

/// True iff every nonzero b_{i,α} has |α| - i equal to the generator degree.
/// Throws std::domain_error on the zero ideal and std::invalid_argument if
/// the generators have different degrees.
bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});

/// Default generator cap of the Taylor oracle.
inline constexpr int kTaylorCap = 12;

/// b_{i,α}(I) from the α-strand of the Taylor complex tensored with the field:
/// basis e_σ for generator subsets σ with lcm(σ) = α in degree |σ| - 1, and
/// d(e_σ) = Σ_j ±e_{σ∖j} over those j with lcm(σ∖j) = α. Independent of
/// Hochster's formula. Throws std::invalid_argument when the ideal has more
/// than `cap` generators.
std::map<int, std::size_t> taylor_strand_betti(const SquarefreeIdeal& ideal, VertexSet alpha, const FieldSpec& field,
                                               int cap = kTaylorCap);

/// The whole table from the Taylor oracle, α ranging over subsets of the lcm.
BettiTable taylor_betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field, int cap = kTaylorCap);

/// Triangular graded display: columns are homological degrees, rows are
/// j - i, zeros shown as '.'.
std::string format_graded(const BettiTable& table);

}  // namespace sqpow

#endif  // SQPOW_BETTI_HPP
