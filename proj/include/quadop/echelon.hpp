#pragma once

// Sparse incremental Gauss-Jordan elimination.
//
// The pivot rows are kept in reduced row-echelon form at all times: every
// stored row has a leading 1 at its pivot column and no entry in any other
// pivot column. Reducing a vector against that set is therefore one pass.
//
// Rows are absorbed in batches. Within a batch, every candidate row is first
// reduced against the frozen pivot set in parallel; the survivors are then
// turned into new pivots serially, and finally the old pivot rows are cleared
// of the new pivot columns in parallel. Since the RREF of a subspace is
// unique, the result does not depend on batch size or thread count.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include <omp.h>

#include "quadop/field.hpp"
#include "quadop/sparse.hpp"

namespace quadop::exactla {

enum class Exec { serial, parallel };

template <class Field>
class Echelon {
 public:
  using Elem = typename Field::Elem;
  using Vec = BasicSparseVec<Elem>;

  Echelon(Field field, std::size_t ncols, Exec exec = Exec::parallel,
          std::size_t batch_size = 1024)
      : field_(std::move(field)),
        ncols_(ncols),
        exec_(exec),
        batch_size_(std::max<std::size_t>(batch_size, 1)),
        pivot_of_(ncols, -1) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const Field& field() const noexcept { return field_; }

  /// Deduplicates (up to scalar multiples), orders by sparsity and absorbs.
  void add_rows(std::vector<Vec> rows) {
    normalize_and_dedup(rows);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Vec& a, const Vec& b) { return a.nnz() < b.nnz(); });
    for (std::size_t start = 0; start < rows.size(); start += batch_size_) {
      const std::size_t stop = std::min(rows.size(), start + batch_size_);
      absorb_batch(rows, start, stop);
      if (rows_.size() == ncols_) break;
    }
  }

  /// One-pass reduction against the current pivot rows. The result has no
  /// entry in any pivot column.
  Vec reduce(const Vec& v) const {
    Workspace ws(ncols_, field_);
    return reduce_with(v, ws, kNoColumn);
  }

  BasicRrefBasis<Elem> basis() const {
    std::vector<std::uint32_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return pivots_[a] < pivots_[b]; });
    BasicRrefBasis<Elem> out;
    out.ncols = ncols_;
    for (auto i : order) {
      out.rows.push_back(rows_[i]);
      out.pivots.push_back(pivots_[i]);
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNoColumn = ~std::uint32_t{0};

  struct Workspace {
    Workspace(std::size_t n, const Field& f) : acc(n, f.zero()), mark(n, 0) {}
    std::vector<Elem> acc;
    std::vector<std::uint8_t> mark;
    std::vector<std::uint32_t> touched;

    void add(std::uint32_t c, const Elem& x, const Field& f) {
      if (!mark[c]) {
        mark[c] = 1;
        touched.push_back(c);
      }
      f.add_to(acc[c], x);
    }
    void sub_mul(std::uint32_t c, const Elem& factor, const Elem& x, const Field& f) {
      if (!mark[c]) {
        mark[c] = 1;
        touched.push_back(c);
      }
      f.sub_mul(acc[c], factor, x);
    }
    Vec gather(std::size_t dim, const Field& f) {
      std::sort(touched.begin(), touched.end());
      Vec out(dim);
      for (auto c : touched) {
        if (!f.is_zero(acc[c])) out.push(c, acc[c]);
        acc[c] = f.zero();
        mark[c] = 0;
      }
      touched.clear();
      return out;
    }
  };

  bool parallel() const noexcept { return exec_ == Exec::parallel; }

  // Reduces v against every pivot row whose pivot column occurs in v, except
  // the pivot `keep` (a row's own pivot when re-cleaning stored rows).
  Vec reduce_with(const Vec& v, Workspace& ws, std::uint32_t keep) const {
    for (std::size_t i = 0; i < v.nnz(); ++i) {
      const std::uint32_t c = v.cols[i];
      const std::int32_t r = pivot_of_[c];
      if (r < 0 || c == keep) {
        ws.add(c, v.vals[i], field_);
        continue;
      }
      const Vec& p = rows_[static_cast<std::size_t>(r)];
      for (std::size_t j = 0; j < p.nnz(); ++j) {
        if (p.cols[j] == c) continue;
        ws.sub_mul(p.cols[j], v.vals[i], p.vals[j], field_);
      }
    }
    return ws.gather(ncols_, field_);
  }

  void make_monic(Vec& v) const {
    const Elem lead_inv = field_.inv(v.vals.front());
    for (auto& x : v.vals) x = field_.mul(x, lead_inv);
  }

  void normalize_and_dedup(std::vector<Vec>& rows) const {
    std::vector<Vec> kept;
    kept.reserve(rows.size());
    std::unordered_multimap<std::size_t, std::size_t> seen;
    seen.reserve(rows.size());
    for (auto& v : rows) {
      if (v.dimension != ncols_) throw ArgumentError("row dimension does not match the matrix");
      if (v.is_zero()) continue;
      make_monic(v);
      std::size_t h = v.nnz();
      for (std::size_t i = 0; i < v.nnz(); ++i) {
        h = h * 1000003u ^ (v.cols[i] + 0x9e3779b9u + field_.hash(v.vals[i]));
      }
      bool duplicate = false;
      auto [lo, hi] = seen.equal_range(h);
      for (auto it = lo; it != hi; ++it) {
        if (kept[it->second] == v) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      seen.emplace(h, kept.size());
      kept.push_back(std::move(v));
    }
    rows = std::move(kept);
  }

  void absorb_batch(const std::vector<Vec>& rows, std::size_t start, std::size_t stop) {
    const auto count = static_cast<std::int64_t>(stop - start);
    std::vector<Vec> reduced(static_cast<std::size_t>(count));

#pragma omp parallel if (parallel())
    {
      Workspace ws(ncols_, field_);
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        reduced[static_cast<std::size_t>(i)] =
            reduce_with(rows[start + static_cast<std::size_t>(i)], ws, kNoColumn);
      }
    }

    const std::size_t old_count = rows_.size();
    Workspace ws(ncols_, field_);
    for (auto& cand : reduced) {
      if (cand.is_zero()) continue;
      // Only pivots created in this batch can still occur in `cand`.
      Vec v = reduce_with(cand, ws, kNoColumn);
      if (v.is_zero()) continue;
      make_monic(v);
      const std::uint32_t pc = v.cols.front();
      for (std::size_t k = old_count; k < rows_.size(); ++k) {
        if (!field_.is_zero(rows_[k].at(pc))) eliminate_column(rows_[k], v, pc, ws);
      }
      pivot_of_[pc] = static_cast<std::int32_t>(rows_.size());
      pivots_.push_back(pc);
      rows_.push_back(std::move(v));
    }
    if (rows_.size() == old_count || old_count == 0) return;

    std::vector<std::uint8_t> fresh(ncols_, 0);
    for (std::size_t k = old_count; k < rows_.size(); ++k) fresh[pivots_[k]] = 1;

    const auto old_rows = static_cast<std::int64_t>(old_count);
#pragma omp parallel if (parallel())
    {
      Workspace local(ncols_, field_);
#pragma omp for schedule(dynamic, 32)
      for (std::int64_t k = 0; k < old_rows; ++k) {
        auto& row = rows_[static_cast<std::size_t>(k)];
        const bool hit = std::any_of(row.cols.begin(), row.cols.end(),
                                     [&](std::uint32_t c) { return fresh[c] != 0; });
        if (hit) row = reduce_with(row, local, pivots_[static_cast<std::size_t>(k)]);
      }
    }
  }

  // row -= row[pc] * pivot_row, where pivot_row is monic at pc.
  void eliminate_column(Vec& row, const Vec& pivot_row, std::uint32_t pc, Workspace& ws) const {
    const Elem factor = row.at(pc);
    for (std::size_t i = 0; i < row.nnz(); ++i) ws.add(row.cols[i], row.vals[i], field_);
    for (std::size_t j = 0; j < pivot_row.nnz(); ++j) {
      ws.sub_mul(pivot_row.cols[j], factor, pivot_row.vals[j], field_);
    }
    row = ws.gather(ncols_, field_);
  }

  Field field_;
  std::size_t ncols_;
  Exec exec_;
  std::size_t batch_size_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<std::uint32_t> pivots_;
  std::vector<Vec> rows_;
};

}  // namespace quadop::exactla
