#pragma once

#include "quadop/exactla.hpp"
#include "quadop/idlang.hpp"

namespace quadop::koszul {

/// Diagonal pairing on the arity-3 space. With canonical index k = 6 * shape
/// + label_rank and sigma the leaf labels of monomial k:
///   <((x1*x2)*x3)_sigma, same> = +sgn(sigma)
///   <(x1*(x2*x3))_sigma, same> = -sgn(sigma)
struct PairingForm {
  exactla::DenseMat matrix;

  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix[i][j]; }
};

PairingForm gk_pairing();

/// Sign of the pairing on basis monomial `index` (the diagonal entry).
int pairing_sign(std::uint32_t index);

/// Annihilator of R under gk_pairing(): the relations of the dual operad.
idlang::RelationSpace koszul_dual(const idlang::RelationSpace& r);

}  // namespace quadop::koszul
