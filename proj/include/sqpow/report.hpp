#ifndef SQPOW_REPORT_HPP
#define SQPOW_REPORT_HPP

#include "sqpow/betti.hpp"
#include "sqpow/graph.hpp"
#include "sqpow/json.hpp"
#include "sqpow/matchings.hpp"
#include "sqpow/monomial_ideal.hpp"

namespace sqpow {

/// Sorted list of variable names.
Json vertex_set_json(const VertexNames& names, VertexSet s);
/// [[u, v], ...] with pairs in edge order.
Json matching_json(const Graph& g, const Matching& m);
/// {"k": k, "parts": [matching, ...]}
Json partition_json(const Graph& g, const AdmissablePartition& p);
/// Generators as sorted lists of variable names, in lex order.
Json ideal_json(const SquarefreeIdeal& ideal);
/// {"convention": "ideal", "entries": [...], "graded": [...], "regularity": r, "field": f}
Json betti_json(const BettiTable& table);

}  // namespace sqpow

#endif  // SQPOW_REPORT_HPP
