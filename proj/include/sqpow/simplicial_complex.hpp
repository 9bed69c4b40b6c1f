#ifndef SQPOW_SIMPLICIAL_COMPLEX_HPP
#define SQPOW_SIMPLICIAL_COMPLEX_HPP

#include <unordered_set>
#include <vector>

#include "sqpow/field.hpp"
#include "sqpow/vertex_set.hpp"

namespace sqpow {

/// Downward-closed family of subsets of a ground set.
///
/// The void complex (no faces) and the irrelevant complex {∅} are distinct
/// values: the first has no reduced homology, the second has H̃_{-1} of
/// dimension one.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(VertexSet ground = {});
  static SimplicialComplex irrelevant(VertexSet ground = {});
  /// Down-closure of `facets`. An empty facet list gives the void complex.
  static SimplicialComplex from_facets(VertexSet ground, const std::vector<VertexSet>& facets);
  /// Throws std::invalid_argument unless `faces` is downward closed and inside `ground`.
  static SimplicialComplex from_faces(VertexSet ground, std::vector<VertexSet> faces);

  VertexSet ground() const { return ground_; }
  /// Faces ordered by size, then lexicographically.
  const std::vector<VertexSet>& faces() const { return faces_; }
  std::size_t num_faces() const { return faces_.size(); }
  bool contains(VertexSet face) const { return lookup_.count(face.bits()) != 0; }

  bool is_void() const { return faces_.empty(); }
  bool is_irrelevant() const { return faces_.size() == 1; }

  /// Vertices v with {v} a face.
  VertexSet vertices() const;
  /// Inclusion-maximal faces in face order.
  std::vector<VertexSet> facets() const;
  /// Largest face size minus one; -1 for {∅}. Throws on the void complex.
  int dimension() const;
  /// Vertex sets of the connected components of the 1-skeleton.
  std::vector<VertexSet> components() const;
  /// At most one component.
  bool is_connected() const { return components().size() <= 1; }

 private:
  SimplicialComplex(VertexSet ground, std::vector<VertexSet> faces);

  VertexSet ground_;
  std::vector<VertexSet> faces_;
  std::unordered_set<std::uint64_t> lookup_;
};

/// Reduced homology dimensions in degrees -1 .. dim.
struct ReducedHomology {
  /// dims[d + 1] = dim H̃_d
  std::vector<std::size_t> dims;

  std::size_t operator[](int degree) const {
    const auto idx = static_cast<std::size_t>(degree + 1);
    return degree >= -1 && idx < dims.size() ? dims[idx] : 0;
  }
  bool is_zero() const;
};

/// Reduced homology from the ranks of the full boundary maps, with C_{-1}
/// spanned by the empty face.
ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace sqpow

#endif  // SQPOW_SIMPLICIAL_COMPLEX_HPP
