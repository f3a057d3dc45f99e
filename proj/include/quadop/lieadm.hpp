#pragma once

// The Lie-admissibility route to the dual relations. For A a free algebra of
// the operad and U an algebra with product ".", the bracket
//
//   [x (x) p, y (x) q] = (x*y) (x) (p.q) - (y*x) (x) (q.p)
//
// on A (x) U satisfies Jacobi exactly when, after reducing every A-monomial
// of the Jacobiator to normal form, the U-side coefficient of each quotient
// basis element vanishes. Those coefficients are the dual relations.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadop/idlang.hpp"

namespace quadop::lieadm {

/// Representatives for the quotient of the arity-3 space by R, with unique
/// normal forms over them.
class QuotientBasis {
 public:
  /// Non-pivot columns of the RREF of R.
  explicit QuotientBasis(const idlang::RelationSpace& r);
  /// Caller-chosen representatives; throws ArgumentError unless they span a
  /// complement of R.
  QuotientBasis(const idlang::RelationSpace& r, std::vector<std::uint32_t> representatives);

  const std::vector<std::uint32_t>& representatives() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }

  /// Coordinates of v modulo R over representatives().
  std::vector<Rational> coordinates(const LinComb& v) const;
  /// The same, as a combination of the representative monomials.
  LinComb normal_form(const LinComb& v) const;

 private:
  exactla::RrefBasis relations_;
  std::vector<std::uint32_t> reps_;
  // Maps coordinates over the non-pivot columns to coordinates over reps_.
  std::optional<exactla::DenseMat> change_;
};

LinComb normal_form(const LinComb& v, const idlang::RelationSpace& r);

struct JacobiatorTerm {
  std::uint32_t a_index;  // A-side monomial, canonical arity-3 index
  int sign;
  std::uint32_t u_index;  // U-side monomial
  friend bool operator==(const JacobiatorTerm&, const JacobiatorTerm&) = default;
};

/// [[a(x)u, b(x)v], c(x)w] + [[b(x)v, c(x)w], a(x)u] + [[c(x)w, a(x)u], b(x)v],
/// expanded from the bracket definition: 12 terms, four per cyclic image, in
/// that order. Variables a, b, c and u, v, w carry labels 1, 2, 3.
std::vector<JacobiatorTerm> jacobiator();

/// One U-side vector per quotient representative, in representative order.
std::vector<LinComb> collected_conditions(const QuotientBasis& q);

/// S3-closed span of collected_conditions(QuotientBasis(r)).
idlang::RelationSpace jacobiator_conditions(const idlang::RelationSpace& r);

/// Six reference U-side conditions extracted for the right-Novikov operad.
inline const std::array<const char*, 6> kNovikovConditions = {
    "(u*v)*w - (u*w)*v = 0",
    "-(v*w)*u - u*(v*w) + v*(u*w) + (u*w)*v = 0",
    "-w*(u*v) + (w*v)*u + u*(w*v) - (u*w)*v = 0",
    "-(v*u)*w + (v*w)*u = 0",
    "w*(v*u) + (v*w)*u - (w*v)*u - v*(w*u) = 0",
    "-(w*v)*u + (w*u)*v = 0",
};

/// Six reference arity-3 rewrite equations for the right-Novikov operad.
inline const std::array<const char*, 6> kNovikovRewrites = {
    "b*(a*c) = a*(b*c)",
    "c*(a*b) = a*(c*b)",
    "c*(b*a) = b*(c*a)",
    "(a*c)*b = (a*b)*c + a*(c*b) - a*(b*c)",
    "(b*c)*a = -a*(b*c) + b*(c*a) + (b*a)*c",
    "(c*b)*a = (c*a)*b - a*(c*b) + b*(c*a)",
};

struct FixtureResult {
  std::string text;
  bool in_span = false;
};

struct ConditionsReport {
  std::vector<FixtureResult> fixtures;
  /// Extracted condition span equals the left-Novikov relation span.
  bool span_matches = false;

  bool all_pass() const;
};

/// Checks each reference U-condition against the left-Novikov span and compares
/// that span with jacobiator_conditions(r).
ConditionsReport check_novikov_conditions(const idlang::RelationSpace& r);

/// Checks each reference rewrite equation as a member of r.
std::vector<FixtureResult> check_rewrites(const idlang::RelationSpace& r);

}  // namespace quadop::lieadm
