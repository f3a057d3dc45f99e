#pragma once

// The identity language and S3-stable relation spaces in arity 3.
//
// Grammar (whitespace is free between tokens):
//
//   identity := sum [ '=' sum ]
//   sum      := [ '+' | '-' ] term { ( '+' | '-' ) term }
//   term     := coef | [ coef [ '*' ] ] product
//   coef     := digits [ '/' digits ]             (a bare coef must be 0)
//   product  := factor [ '*' factor ]
//   factor   := letter | '(' factor '*' factor ')'
//
// Letters are single lowercase variables. Every term must use the same three
// distinct letters, each once. Letters map to labels 1, 2, 3 in alphabetical
// order, so "b*(a*c)" is the monomial (2*(1*3)) and "(u*v)*w" is ((1*2)*3).
// An identity "L = R" denotes the vector L - R.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadop/exactla.hpp"
#include "quadop/lincomb.hpp"

namespace quadop::idlang {

inline constexpr unsigned kRelationArity = 3;
inline constexpr std::size_t kRelationDim = 12;

struct IdentitySource {
  std::string text;
  std::optional<std::string> name;
};

struct ParsedIdentity {
  LinComb value;        // LHS - RHS
  bool is_equation = false;
};

/// Throws ParseError (syntax, non-multilinear term, variable-set mismatch,
/// arity other than 3).
ParsedIdentity parse(std::string_view text);
LinComb parse_identity(std::string_view text);
inline LinComb parse_identity(const IdentitySource& src) { return parse_identity(src.text); }

/// An S3-stable subspace of the 12-dimensional arity-3 space.
class RelationSpace {
 public:
  RelationSpace();  // the zero space

  /// Span of every relabeling of every generator.
  static RelationSpace s3_closure(const std::vector<LinComb>& generators,
                                  std::vector<std::string> generator_names = {});
  static RelationSpace from_identities(const std::vector<std::string>& texts);
  /// Wraps a basis that is already known to be S3-stable (re-checked).
  static RelationSpace from_basis(exactla::RrefBasis basis,
                                  std::vector<std::string> generator_names = {});
  static RelationSpace full();

  const exactla::RrefBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.rank(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  /// True when S3-closure strictly enlarged the span of the given generators.
  bool closure_enlarged() const noexcept { return enlarged_; }

  std::vector<LinComb> rows() const;
  std::vector<std::string> render_rows() const;
  bool contains(const LinComb& v) const;

  friend bool operator==(const RelationSpace& a, const RelationSpace& b) {
    return exactla::same_span(a.basis_, b.basis_);
  }

 private:
  exactla::RrefBasis basis_;
  std::vector<std::string> names_;
  bool enlarged_ = false;
};

/// Mirror image of every relation (the opposite product).
RelationSpace opposite_relations(const RelationSpace& r);

}  // namespace quadop::idlang
