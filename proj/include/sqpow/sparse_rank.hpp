#ifndef SQPOW_SPARSE_RANK_HPP
#define SQPOW_SPARSE_RANK_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sqpow/field.hpp"

namespace sqpow {

/// Column of a sparse integer matrix: (row, coefficient) pairs sorted by row.
using IntColumn = std::vector<std::pair<std::uint32_t, int>>;

/// Map C_g -> C_{g-1} of a finite chain complex, one column per basis element
/// of C_g. Row indices refer to the basis of C_{g-1}.
struct BoundaryMap {
  std::vector<IntColumn> columns;
};

/// Gaussian elimination by columns over a field, pivoting on the largest row
/// index of each column. Stores the reduced pivot columns.
template <class Field>
class ColumnReducer {
 public:
  using Element = typename Field::Element;
  using Column = std::vector<std::pair<std::uint32_t, Element>>;

  ColumnReducer(const Field& field, std::size_t num_rows)
      : field_(field), pivot_of_row_(num_rows, -1) {}

  /// Reduces `col` against the stored pivots. Returns the pivot row when the
  /// column is independent of everything added so far, or -1.
  std::int64_t add(Column col) {
    Column scratch;
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      const std::int32_t p = pivot_of_row_[low];
      if (p < 0) {
        const Element inv = field_.inverse(col.back().second);
        for (auto& [row, value] : col) value = field_.mul(value, inv);
        pivot_of_row_[low] = static_cast<std::int32_t>(pivots_.size());
        pivots_.push_back(std::move(col));
        return low;
      }
      const Element c = col.back().second;
      subtract_multiple(col, c, pivots_[static_cast<std::size_t>(p)], scratch);
      std::swap(col, scratch);
    }
    return -1;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  // out = a - c * b; b has a 1 in its last position, which cancels a's last entry.
  void subtract_multiple(const Column& a, const Element& c, const Column& b, Column& out) const {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Element v = field_.sub_mul(field_.from_int(0), c, b[j].second);
        out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        Element v = field_.sub_mul(a[i].second, c, b[j].second);
        if (!field_.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
  }

  const Field& field_;
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<Column> pivots_;
};

/// Homology dimensions of the chain complex C_0 <- C_1 <- ... <- C_top over
/// `field`: dims[g] = dim C_g - rank(d_g) - rank(d_{g+1}).
///
/// `boundaries[g]` is d_g : C_g -> C_{g-1} for g >= 1 (boundaries[0] is ignored).
/// Maps are reduced from the top down; a basis element that is the pivot row
/// of a reduced column of d_{g+1} is skipped when reducing d_g, since its
/// column is already a combination of earlier ones.
template <class Field>
std::vector<std::size_t> chain_homology(const std::vector<std::size_t>& group_sizes,
                                        const std::vector<BoundaryMap>& boundaries, const Field& field) {
  const std::size_t top = group_sizes.size();
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[g] = rank d_g
  std::vector<char> cleared;
  for (std::size_t g = top; g-- > 1;) {
    const auto& cols = boundaries[g].columns;
    ColumnReducer<Field> reducer(field, group_sizes[g - 1]);
    std::vector<char> pivot_rows(group_sizes[g - 1], 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!cleared.empty() && cleared[c]) continue;
      typename ColumnReducer<Field>::Column col;
      col.reserve(cols[c].size());
      for (auto [row, v] : cols[c]) col.emplace_back(row, field.from_int(v));
      const std::int64_t low = reducer.add(std::move(col));
      if (low >= 0) pivot_rows[static_cast<std::size_t>(low)] = 1;
    }
    ranks[g] = reducer.rank();
    cleared = std::move(pivot_rows);
  }
  std::vector<std::size_t> dims(top, 0);
  for (std::size_t g = 0; g < top; ++g) dims[g] = group_sizes[g] - ranks[g] - ranks[g + 1];
  return dims;
}

/// Dispatches chain_homology on a runtime field choice.
std::vector<std::size_t> chain_homology(const std::vector<std::size_t>& group_sizes,
                                        const std::vector<BoundaryMap>& boundaries, const FieldSpec& field);

/// Rank of a single integer matrix given by columns over `field`.
std::size_t matrix_rank(const std::vector<IntColumn>& columns, std::size_t num_rows, const FieldSpec& field);

}  // namespace sqpow

#endif  // SQPOW_SPARSE_RANK_HPP
