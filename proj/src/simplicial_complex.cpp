#include "sqpow/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sqpow/sparse_rank.hpp"

namespace sqpow {

namespace {

bool face_order(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> faces)
    : ground_(ground), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  lookup_.reserve(faces_.size());
  for (VertexSet f : faces_) lookup_.insert(f.bits());
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ground) { return {ground, {}}; }

SimplicialComplex SimplicialComplex::irrelevant(VertexSet ground) { return {ground, {VertexSet{}}}; }

SimplicialComplex SimplicialComplex::from_facets(VertexSet ground, const std::vector<VertexSet>& facets) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> faces;
  for (VertexSet f : facets) {
    if (!f.subset_of(ground)) throw std::invalid_argument("facet outside the ground set");
    for_each_subset(f, [&](VertexSet s) {
      if (seen.insert(s.bits()).second) faces.push_back(s);
    });
  }
  return {ground, std::move(faces)};
}

SimplicialComplex SimplicialComplex::from_faces(VertexSet ground, std::vector<VertexSet> faces) {
  SimplicialComplex out(ground, std::move(faces));
  for (VertexSet f : out.faces_) {
    if (!f.subset_of(ground)) throw std::invalid_argument("face outside the ground set");
    for (Vertex v : f) {
      if (!out.contains(f - VertexSet::single(v))) throw std::invalid_argument("face family is not downward closed");
    }
  }
  return out;
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet out;
  for (VertexSet f : faces_) out |= f;
  return out;
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces_) {
    bool maximal = true;
    for (Vertex v : ground_ - f) {
      if (contains(f | VertexSet::single(v))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) throw std::domain_error("the void complex has no dimension");
  return faces_.back().size() - 1;
}

std::vector<VertexSet> SimplicialComplex::components() const {
  const VertexSet verts = vertices();
  std::unordered_map<Vertex, VertexSet> adj;
  for (VertexSet f : faces_) {
    if (f.size() != 2) continue;
    adj[f.front()] |= f;
    adj[f.back()] |= f;
  }
  std::vector<VertexSet> out;
  VertexSet rest = verts;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) {
        if (auto it = adj.find(v); it != adj.end()) next |= it->second;
      }
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool ReducedHomology::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) return {};
  // Group g holds the faces of size g, so group 0 is C_{-1} = span{∅}.
  const int top = complex.dimension() + 2;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(top), 0);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(complex.num_faces());
  for (VertexSet f : complex.faces()) {
    auto& slot = sizes[static_cast<std::size_t>(f.size())];
    index.emplace(f.bits(), static_cast<std::uint32_t>(slot++));
  }
  std::vector<BoundaryMap> boundaries(static_cast<std::size_t>(top));
  for (VertexSet f : complex.faces()) {
    if (f.empty()) continue;
    IntColumn col;
    int sign = 1;
    for (Vertex v : f) {
      col.emplace_back(index.at((f - VertexSet::single(v)).bits()), sign);
      sign = -sign;
    }
    std::sort(col.begin(), col.end());
    boundaries[static_cast<std::size_t>(f.size())].columns.push_back(std::move(col));
  }
  return {chain_homology(sizes, boundaries, field)};
}

}  // namespace sqpow
