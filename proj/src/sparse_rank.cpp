#include "sqpow/sparse_rank.hpp"

namespace sqpow {

std::vector<std::size_t> chain_homology(const std::vector<std::size_t>& group_sizes,
                                        const std::vector<BoundaryMap>& boundaries, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::rational) return chain_homology(group_sizes, boundaries, RationalField{});
  return chain_homology(group_sizes, boundaries, PrimeField(field.characteristic()));
}

namespace {

template <class Field>
std::size_t rank_impl(const std::vector<IntColumn>& columns, std::size_t num_rows, const Field& field) {
  ColumnReducer<Field> reducer(field, num_rows);
  for (const auto& c : columns) {
    typename ColumnReducer<Field>::Column col;
    for (auto [row, v] : c) {
      if (v != 0) col.emplace_back(row, field.from_int(v));
    }
    // from_int can turn a nonzero integer into zero mod p
    std::erase_if(col, [&](const auto& e) { return field.is_zero(e.second); });
    reducer.add(std::move(col));
  }
  return reducer.rank();
}

}  // namespace

std::size_t matrix_rank(const std::vector<IntColumn>& columns, std::size_t num_rows, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::rational) return rank_impl(columns, num_rows, RationalField{});
  return rank_impl(columns, num_rows, PrimeField(field.characteristic()));
}

}  // namespace sqpow
