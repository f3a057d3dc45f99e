#include "quadop/koszul.hpp"

#include "quadop/treekit.hpp"

namespace quadop::koszul {

int pairing_sign(std::uint32_t index) {
  if (index >= idlang::kRelationDim) throw ArgumentError("pairing index out of range");
  const auto m = treekit::TreeMonomial::from_index(idlang::kRelationArity, index);
  const auto labels = m.labels();
  const int sign = treekit::permutation_sign(labels);
  const bool left_comb = m.shape_rank() == 0;
  return left_comb ? sign : -sign;
}

PairingForm gk_pairing() {
  PairingForm form;
  form.matrix.assign(idlang::kRelationDim,
                     std::vector<Rational>(idlang::kRelationDim, Rational(0)));
  for (std::uint32_t k = 0; k < idlang::kRelationDim; ++k) form.matrix[k][k] = pairing_sign(k);
  return form;
}

idlang::RelationSpace koszul_dual(const idlang::RelationSpace& r) {
  auto basis = exactla::annihilator(r.basis(), gk_pairing().matrix);
  return idlang::RelationSpace::from_basis(std::move(basis), {"annihilator of the relations"});
}

}  // namespace quadop::koszul
