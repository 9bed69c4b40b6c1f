#ifndef SQPOW_MONOMIAL_IDEAL_HPP
#define SQPOW_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "sqpow/graph.hpp"

namespace sqpow {

/// A squarefree monomial is identified with its support.
using SquarefreeMonomial = VertexSet;

/// Squarefree monomial ideal in the polynomial ring over a fixed ordered set of
/// variables. Generators are kept minimal (an antichain under inclusion) and
/// sorted with lex_less, so two ideals are equal iff their generator lists are.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class SquarefreeIdeal {
 public:
  /// Zero ideal over an empty ring.
  SquarefreeIdeal();
  /// Minimalizes `gens`. Every generator must be a subset of the ambient variables.
  SquarefreeIdeal(VertexNames ambient, std::vector<SquarefreeMonomial> gens);

  /// Variables named x1..xn; handy for small hand-written ideals.
  static VertexNames variables(int n);

  const VertexNames& ambient() const { return ambient_; }
  int num_variables() const { return static_cast<int>(ambient_->size()); }
  const std::vector<SquarefreeMonomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }

  /// m lies in the ideal iff some generator divides it.
  bool contains(SquarefreeMonomial m) const;
  /// Degree shared by all generators, or -1 if they differ (or the ideal is zero).
  int generator_degree() const;

  std::string to_string() const;

  bool operator==(const SquarefreeIdeal& o) const;

 private:
  VertexNames ambient_;
  std::vector<SquarefreeMonomial> gens_;
};

/// Removes non-minimal generators and duplicates; sorts with lex_less.
std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens);

/// I(G): one generator per edge, over the variables V(G) (the graph's universe).
SquarefreeIdeal edge_ideal(const Graph& g);

/// I(G)^[k]: the supports of all k-matchings. Zero when k > mat(G).
/// Throws std::invalid_argument for k < 1.
SquarefreeIdeal squarefree_power(const Graph& g, int k);

/// I : m, generated by u / gcd(u, m) over the generators u of I.
SquarefreeIdeal colon(const SquarefreeIdeal& ideal, SquarefreeMonomial m);

/// I + (m).
SquarefreeIdeal add_monomial(const SquarefreeIdeal& ideal, SquarefreeMonomial m);

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// I^{<= m}: the minimal generators dividing m.
SquarefreeIdeal restriction(const SquarefreeIdeal& ideal, SquarefreeMonomial m);

/// Union of the generator supports. Throws std::domain_error on the zero ideal.
SquarefreeMonomial lcm_of_generators(const SquarefreeIdeal& ideal);

}  // namespace sqpow

#endif  // SQPOW_MONOMIAL_IDEAL_HPP
