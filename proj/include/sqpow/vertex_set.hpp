#ifndef SQPOW_VERTEX_SET_HPP
#define SQPOW_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace sqpow {

using Vertex = int;

/// Maximum number of vertices (variables) in any graph or ideal.
inline constexpr int kMaxVertices = 64;

/// A subset of a fixed universe of at most 64 vertices, stored as a bitmask.
/// Doubles as the support of a squarefree monomial.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool contains(VertexSet o) const { return (o.bits_ & ~bits_) == 0; }
  constexpr bool subset_of(VertexSet o) const { return o.contains(*this); }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists ({0,1} < {0,2} < {1}).
/// Used wherever output order must be reproducible.
inline bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Calls f(sub) for every subset of `set`, including the empty set and `set`.
template <class F>
void for_each_subset(VertexSet set, F&& f) {
  std::uint64_t s = set.bits(), sub = 0;
  while (true) {
    f(VertexSet(sub));
    if (sub == s) break;
    sub = (sub - s) & s;
  }
}

}  // namespace sqpow

#endif  // SQPOW_VERTEX_SET_HPP
