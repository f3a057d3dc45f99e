#pragma once

#include <span>
#include <string>

#include "quadop/sparse.hpp"
#include "quadop/treekit.hpp"

namespace quadop {

/// Sparse rational combination of the arity-n multilinear monomials, in
/// canonical index coordinates.
struct LinComb {
  unsigned arity = 0;
  exactla::SparseVec coords;

  static LinComb zero(unsigned arity);
  static LinComb monomial(const treekit::TreeMonomial& m, Rational coefficient = 1);
  static LinComb from_vec(unsigned arity, exactla::SparseVec v);

  bool is_zero() const noexcept { return coords.is_zero(); }

  /// Fully parenthesized terms, e.g. "((a*b)*c) - 2 (a*(b*c))"; "0" when zero.
  std::string render() const;

  friend bool operator==(const LinComb&, const LinComb&) = default;
};

/// Arity mismatch throws ArgumentError.
LinComb operator+(const LinComb& x, const LinComb& y);
LinComb operator-(const LinComb& x, const LinComb& y);
LinComb operator-(const LinComb& x);

LinComb relabel(const LinComb& v, std::span<const unsigned> sigma);
LinComb mirror(const LinComb& v);

}  // namespace quadop
