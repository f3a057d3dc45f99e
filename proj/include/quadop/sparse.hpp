#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadop/error.hpp"
#include "quadop/rational.hpp"

namespace quadop::exactla {

/// Sparse vector: strictly increasing columns, no stored zeros.
template <class T>
struct BasicSparseVec {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> cols;
  std::vector<T> vals;

  BasicSparseVec() = default;
  explicit BasicSparseVec(std::size_t dim) : dimension(dim) {}

  std::size_t nnz() const noexcept { return cols.size(); }
  bool is_zero() const noexcept { return cols.empty(); }

  void push(std::uint32_t col, T value) {
    cols.push_back(col);
    vals.push_back(std::move(value));
  }

  /// Coefficient at `col`, zero when absent.
  T at(std::uint32_t col) const {
    std::size_t lo = 0;
    std::size_t hi = cols.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cols[mid] < col) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < cols.size() && cols[lo] == col ? vals[lo] : T(0);
  }

  friend bool operator==(const BasicSparseVec&, const BasicSparseVec&) = default;
};

template <class T>
struct BasicSparseMat {
  std::size_t ncols = 0;
  std::vector<BasicSparseVec<T>> rows;
};

/// Rows in reduced row-echelon form, sorted by pivot column. Every pivot
/// coefficient is 1 and pivot columns are zero in all other rows.
template <class T>
struct BasicRrefBasis {
  std::size_t ncols = 0;
  std::vector<BasicSparseVec<T>> rows;
  std::vector<std::uint32_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }

  /// Columns that are not pivots, increasing.
  std::vector<std::uint32_t> free_columns() const {
    std::vector<std::uint32_t> out;
    std::size_t k = 0;
    for (std::uint32_t c = 0; c < ncols; ++c) {
      if (k < pivots.size() && pivots[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  friend bool operator==(const BasicRrefBasis&, const BasicRrefBasis&) = default;
};

using SparseVec = BasicSparseVec<Rational>;
using SparseMat = BasicSparseMat<Rational>;
using RrefBasis = BasicRrefBasis<Rational>;

using ModVec = BasicSparseVec<std::uint32_t>;
using ModMat = BasicSparseMat<std::uint32_t>;
using ModRrefBasis = BasicRrefBasis<std::uint32_t>;

/// Builds a sparse vector from unsorted (column, value) contributions,
/// summing duplicates and dropping zeros.
template <class Field>
BasicSparseVec<typename Field::Elem> make_vec(
    const Field& field, std::size_t dimension,
    std::vector<std::pair<std::uint32_t, typename Field::Elem>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  BasicSparseVec<typename Field::Elem> out(dimension);
  for (std::size_t i = 0; i < terms.size();) {
    const std::uint32_t col = terms[i].first;
    if (col >= dimension) throw ArgumentError("column index outside the vector dimension");
    auto sum = field.zero();
    for (; i < terms.size() && terms[i].first == col; ++i) field.add_to(sum, terms[i].second);
    if (!field.is_zero(sum)) out.push(col, std::move(sum));
  }
  return out;
}

}  // namespace quadop::exactla
