#include "sqpow/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqpow/matchings.hpp"

namespace sqpow {

std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens) {
  // Sorting by degree first means any divisor of a monomial is seen before it.
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<SquarefreeMonomial> kept;
  for (VertexSet g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](VertexSet h) { return h.subset_of(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

SquarefreeIdeal::SquarefreeIdeal() : ambient_(std::make_shared<const std::vector<std::string>>()) {}

SquarefreeIdeal::SquarefreeIdeal(VertexNames ambient, std::vector<SquarefreeMonomial> gens)
    : ambient_(std::move(ambient)), gens_(minimalize(std::move(gens))) {
  const VertexSet vars = VertexSet::range(num_variables());
  for (VertexSet g : gens_) {
    if (!g.subset_of(vars)) throw std::invalid_argument("generator uses a variable outside the ring");
  }
}

VertexNames SquarefreeIdeal::variables(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool SquarefreeIdeal::contains(SquarefreeMonomial m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return g.subset_of(m); });
}

int SquarefreeIdeal::generator_degree() const {
  if (gens_.empty()) return -1;
  const int d = gens_.front().size();
  for (VertexSet g : gens_) {
    if (g.size() != d) return -1;
  }
  return d;
}

std::string SquarefreeIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) out += ", ";
    if (gens_[i].empty()) out += "1";
    for (Vertex v : gens_[i]) out += (*ambient_)[static_cast<std::size_t>(v)];
  }
  return out + ")";
}

bool SquarefreeIdeal::operator==(const SquarefreeIdeal& o) const {
  return num_variables() == o.num_variables() && gens_ == o.gens_;
}

SquarefreeIdeal edge_ideal(const Graph& g) {
  std::vector<SquarefreeMonomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(e.support());
  return {g.names(), std::move(gens)};
}

SquarefreeIdeal squarefree_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("squarefree_power: k must be at least 1");
  std::vector<SquarefreeMonomial> gens;
  for_each_matching(g, k, [&](const std::vector<Edge>& es) {
    VertexSet s;
    for (const Edge& e : es) s |= e.support();
    gens.push_back(s);
  });
  return {g.names(), std::move(gens)};
}

SquarefreeIdeal colon(const SquarefreeIdeal& ideal, SquarefreeMonomial m) {
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(ideal.generators().size());
  for (VertexSet g : ideal.generators()) gens.push_back(g - m);
  return {ideal.ambient(), std::move(gens)};
}

SquarefreeIdeal add_monomial(const SquarefreeIdeal& ideal, SquarefreeMonomial m) {
  auto gens = ideal.generators();
  gens.push_back(m);
  return {ideal.ambient(), std::move(gens)};
}

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.num_variables() != b.num_variables()) throw std::invalid_argument("sum: ideals live in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return {a.ambient(), std::move(gens)};
}

SquarefreeIdeal restriction(const SquarefreeIdeal& ideal, SquarefreeMonomial m) {
  std::vector<SquarefreeMonomial> gens;
  for (VertexSet g : ideal.generators()) {
    if (g.subset_of(m)) gens.push_back(g);
  }
  return {ideal.ambient(), std::move(gens)};
}

SquarefreeMonomial lcm_of_generators(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("lcm_of_generators: zero ideal");
  VertexSet out;
  for (VertexSet g : ideal.generators()) out |= g;
  return out;
}

}  // namespace sqpow
