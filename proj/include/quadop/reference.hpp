#pragma once

// Serial dense Gauss-Jordan elimination. Kept as the reference the sparse
// OpenMP kernel is tested and benchmarked against; quadratic memory, so only
// for small matrices.

#include <vector>

#include "quadop/field.hpp"
#include "quadop/sparse.hpp"

namespace quadop::exactla::reference {

template <class Field>
BasicRrefBasis<typename Field::Elem> rref_dense(const Field& field,
                                                const BasicSparseMat<typename Field::Elem>& m) {
  using Elem = typename Field::Elem;
  const std::size_t ncols = m.ncols;
  std::vector<std::vector<Elem>> a;
  a.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    std::vector<Elem> dense(ncols, field.zero());
    for (std::size_t i = 0; i < row.nnz(); ++i) dense[row.cols[i]] = row.vals[i];
    a.push_back(std::move(dense));
  }

  BasicRrefBasis<Elem> out;
  out.ncols = ncols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && field.is_zero(a[piv][col])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const Elem inv = field.inv(a[rank][col]);
    for (auto& x : a[rank]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || field.is_zero(a[i][col])) continue;
      const Elem f = a[i][col];
      for (std::size_t j = 0; j < ncols; ++j) field.sub_mul(a[i][j], f, a[rank][j]);
    }
    out.pivots.push_back(static_cast<std::uint32_t>(col));
    ++rank;
  }
  for (std::size_t r = 0; r < rank; ++r) {
    BasicSparseVec<Elem> row(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!field.is_zero(a[r][j])) row.push(static_cast<std::uint32_t>(j), a[r][j]);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace quadop::exactla::reference
