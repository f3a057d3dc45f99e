#pragma once

// Multilinear planar binary tree monomials: the basis of the free magma
// operad in arity n.
//
// Canonical order. Monomials of arity n are indexed by
//
//     index = shape_rank * n! + label_rank
//
// where label_rank is the lexicographic rank of the leaf labels read left to
// right, and shapes are sorted by left-subtree leaf count descending, ties
// broken by the rank of the left subtree, then of the right subtree. In arity
// 3 this puts the six ((x*y)*z) monomials at indices 0..5 and the six
// (x*(y*z)) monomials at 6..11.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quadop::treekit {

inline constexpr unsigned kDefaultMaxArity = 7;
// Beyond this the 64-bit index and the factorial tables stop being useful.
inline constexpr unsigned kHardMaxArity = 12;

std::uint64_t factorial(unsigned n);
/// Catalan number C_k.
std::uint64_t catalan(unsigned k);
/// n! * C_{n-1}, the number of multilinear monomials of arity n.
std::uint64_t monomial_count(unsigned n);

/// A planar binary tree whose leaves carry labels. Stored as a preorder code:
/// 0 marks an internal node, a positive value is a leaf label.
///
/// A TreeMonomial is multilinear when its labels are exactly {1..arity}. The
/// intermediate trees built by join() need not be; every operation that
/// depends on the canonical index checks it.
class TreeMonomial {
 public:
  TreeMonomial() = default;

  static TreeMonomial leaf(unsigned label);
  static TreeMonomial join(const TreeMonomial& left, const TreeMonomial& right);
  /// Inverse of index(): the monomial at position `index` of arity `arity`.
  static TreeMonomial from_index(unsigned arity, std::uint64_t index);
  /// Parses the rendering produced by render(), e.g. "((a*b)*c)"; the outermost
  /// parentheses may be dropped. Letters
  /// a, b, c, ... map to labels 1, 2, 3, ...
  static TreeMonomial parse(std::string_view text);
  /// Wraps a preorder code (0 = internal node, k > 0 = leaf labeled k).
  /// Throws ArgumentError unless the code describes exactly one full tree.
  static TreeMonomial from_code(std::vector<std::uint8_t> code);

  unsigned arity() const noexcept { return arity_; }
  bool is_leaf() const noexcept { return code_.size() == 1; }
  bool is_multilinear() const;

  /// Leaf labels read left to right.
  std::vector<unsigned> labels() const;
  TreeMonomial left() const;
  TreeMonomial right() const;

  std::uint64_t shape_rank() const;
  std::uint64_t label_rank() const;
  std::uint64_t index() const;

  /// "((a*b)*c)" style rendering; a leaf renders as its bare letter.
  std::string render() const;

  std::span<const std::uint8_t> code() const noexcept { return code_; }

  friend bool operator==(const TreeMonomial&, const TreeMonomial&) = default;
  friend auto operator<=>(const TreeMonomial&, const TreeMonomial&) = default;

 private:
  explicit TreeMonomial(std::vector<std::uint8_t> code);

  std::vector<std::uint8_t> code_;
  unsigned arity_ = 0;
};

/// All multilinear monomials of arity n in canonical index order.
/// Throws CapacityError when n exceeds `max_arity`.
std::vector<TreeMonomial> enumerate_multilinear(unsigned n,
                                                unsigned max_arity = kDefaultMaxArity);

/// Operadic partial composition outer o_slot inner. Labels of the result:
/// outer labels below `slot` are kept, inner label k becomes k + slot - 1,
/// outer labels above `slot` are shifted up by inner.arity() - 1.
TreeMonomial graft(const TreeMonomial& outer, unsigned slot, const TreeMonomial& inner);

/// Left action of S_n: leaf label i becomes sigma[i - 1].
TreeMonomial relabel(const TreeMonomial& m, std::span<const unsigned> sigma);

/// Swaps the two children of every internal node (the opposite product).
TreeMonomial mirror(const TreeMonomial& m);

/// Sign of a permutation given in one-line notation (values 1..n or 0..n-1).
int permutation_sign(std::span<const unsigned> perm);

/// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<unsigned>> permutations(unsigned n);

}  // namespace quadop::treekit
