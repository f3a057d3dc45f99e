#include "quadop/exactla.hpp"

namespace quadop::exactla {

std::string FieldSpec::name() const {
  return kind == Kind::rational ? "rational" : "prime:" + std::to_string(prime);
}

RrefBasis rref(const SparseMat& m, Exec exec) {
  Echelon<RationalField> ech(RationalField{}, m.ncols, exec);
  ech.add_rows(m.rows);
  return ech.basis();
}

ModVec to_mod_p(const SparseVec& v, const PrimeField& field) {
  ModVec out(v.dimension);
  for (std::size_t i = 0; i < v.nnz(); ++i) {
    const auto x = field.from_rational(v.vals[i]);
    if (x != 0) out.push(v.cols[i], x);
  }
  return out;
}

ModRrefBasis rref_mod_p(const SparseMat& m, std::uint32_t p, Exec exec) {
  const PrimeField field(p);
  std::vector<ModVec> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) rows.push_back(to_mod_p(r, field));
  Echelon<PrimeField> ech(field, m.ncols, exec);
  ech.add_rows(std::move(rows));
  return ech.basis();
}

std::size_t rank(const SparseMat& m, FieldSpec field) {
  if (field.kind == FieldSpec::Kind::rational) return rref(m).rank();
  return rref_mod_p(m, field.prime).rank();
}

std::size_t rank_two_primes(const SparseMat& m) {
  const std::size_t a = rref_mod_p(m, kPrimeA).rank();
  const std::size_t b = rref_mod_p(m, kPrimeB).rank();
  if (a != b) {
    throw CrossCheckError("rank mod " + std::to_string(kPrimeA) + " is " + std::to_string(a) +
                          " but rank mod " + std::to_string(kPrimeB) + " is " +
                          std::to_string(b));
  }
  return a;
}

Membership member(const SparseVec& v, const RrefBasis& basis) {
  if (v.dimension != basis.ncols) {
    throw ArgumentError("member: vector dimension " + std::to_string(v.dimension) +
                        " does not match basis dimension " + std::to_string(basis.ncols));
  }
  Membership out;
  out.coordinates.reserve(basis.rank());
  std::vector<Rational> acc = to_dense(v);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const Rational coord = acc[basis.pivots[i]];
    out.coordinates.push_back(coord);
    if (sgn(coord) == 0) continue;
    const auto& row = basis.rows[i];
    for (std::size_t j = 0; j < row.nnz(); ++j) acc[row.cols[j]] -= coord * row.vals[j];
  }
  out.residual = to_sparse(acc);
  out.in_span = out.residual.is_zero();
  return out;
}

RrefBasis span_of(std::size_t ncols, std::vector<SparseVec> rows) {
  for (const auto& r : rows) {
    if (r.dimension != ncols) throw ArgumentError("span_of: row dimension mismatch");
  }
  SparseMat m{ncols, std::move(rows)};
  return rref(m, Exec::serial);
}

RrefBasis kernel(const RrefBasis& basis) {
  std::vector<SparseVec> out;
  for (auto f : basis.free_columns()) {
    std::vector<Rational> y(basis.ncols, Rational(0));
    y[f] = 1;
    for (std::size_t i = 0; i < basis.rank(); ++i) {
      y[basis.pivots[i]] = -basis.rows[i].at(f);
    }
    out.push_back(to_sparse(y));
  }
  return span_of(basis.ncols, std::move(out));
}

RrefBasis annihilator(const RrefBasis& sub, const DenseMat& form) {
  const std::size_t n = sub.ncols;
  if (form.size() != n) throw ArgumentError("annihilator: form size does not match the space");
  std::vector<SparseVec> form_rows;
  for (const auto& row : form) {
    if (row.size() != n) throw ArgumentError("annihilator: form is not square");
    form_rows.push_back(to_sparse(row));
  }
  if (span_of(n, form_rows).rank() != n) throw ArgumentError("annihilator: form is singular");

  // Row r of sub becomes the linear functional y -> r^T F y.
  std::vector<SparseVec> functionals;
  for (const auto& r : sub.rows) {
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t k = 0; k < r.nnz(); ++k) {
      const auto& frow = form[r.cols[k]];
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(frow[j]) != 0) w[j] += r.vals[k] * frow[j];
      }
    }
    functionals.push_back(to_sparse(w));
  }
  return kernel(span_of(n, std::move(functionals)));
}

bool same_span(const RrefBasis& a, const RrefBasis& b) {
  return a.ncols == b.ncols && a.pivots == b.pivots && a.rows == b.rows;
}

bool is_subspace(const RrefBasis& a, const RrefBasis& b) {
  if (a.ncols != b.ncols) return false;
  for (const auto& r : a.rows) {
    if (!member(r, b).in_span) return false;
  }
  return true;
}

std::optional<DenseMat> inverse(const DenseMat& a) {
  const std::size_t n = a.size();
  DenseMat work = a;
  DenseMat inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw ArgumentError("inverse: matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(work[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(work[col], work[piv]);
    std::swap(inv[col], inv[piv]);
    const Rational scale = 1 / work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(work[i][col]) == 0) continue;
      const Rational f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

SparseVec to_sparse(const std::vector<Rational>& dense) {
  SparseVec v(dense.size());
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (sgn(dense[j]) != 0) v.push(static_cast<std::uint32_t>(j), dense[j]);
  }
  return v;
}

std::vector<Rational> to_dense(const SparseVec& v) {
  std::vector<Rational> out(v.dimension, Rational(0));
  for (std::size_t i = 0; i < v.nnz(); ++i) out[v.cols[i]] = v.vals[i];
  return out;
}

}  // namespace quadop::exactla
