#pragma once

// Exact linear algebra over Q and Z/pZ: reduced row-echelon bases, span
// membership, rank certification over two primes, and annihilators under a
// bilinear form. No floating point anywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadop/echelon.hpp"
#include "quadop/field.hpp"
#include "quadop/rational.hpp"
#include "quadop/sparse.hpp"

namespace quadop::exactla {

/// Default certificate primes for the modular rank path.
inline constexpr std::uint32_t kPrimeA = 2147483647u;
inline constexpr std::uint32_t kPrimeB = 2147483629u;

struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec modp(std::uint32_t p) { return {Kind::prime, p}; }
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using DenseMat = std::vector<std::vector<Rational>>;

RrefBasis rref(const SparseMat& m, Exec exec = Exec::parallel);
ModRrefBasis rref_mod_p(const SparseMat& m, std::uint32_t p, Exec exec = Exec::parallel);

/// Rank over the requested field. Throws FieldError when the prime divides a
/// denominator.
std::size_t rank(const SparseMat& m, FieldSpec field);

/// Rank over kPrimeA and kPrimeB; throws CrossCheckError if they differ.
std::size_t rank_two_primes(const SparseMat& m);

ModVec to_mod_p(const SparseVec& v, const PrimeField& field);

struct Membership {
  bool in_span = false;
  /// One coordinate per basis row (the value of v at that row's pivot).
  std::vector<Rational> coordinates;
  /// v minus its projection; zero exactly when in_span. Entries live only in
  /// non-pivot columns.
  SparseVec residual;
};

/// Throws ArgumentError on dimension mismatch.
Membership member(const SparseVec& v, const RrefBasis& basis);

/// RREF basis of the row space of `rows` (any order, any redundancy).
RrefBasis span_of(std::size_t ncols, std::vector<SparseVec> rows);

/// Basis of { y : x . y = 0 for all x in the row space of `basis` }.
RrefBasis kernel(const RrefBasis& basis);

/// { y : r^T F y = 0 for all r in sub }. Throws ArgumentError when `form` is
/// not square of side sub.ncols or is singular.
RrefBasis annihilator(const RrefBasis& sub, const DenseMat& form);

/// RREF bases are unique, so span equality is row equality.
bool same_span(const RrefBasis& a, const RrefBasis& b);
/// a is contained in b.
bool is_subspace(const RrefBasis& a, const RrefBasis& b);

/// Inverse of a square rational matrix, or nullopt when singular.
std::optional<DenseMat> inverse(const DenseMat& a);

SparseVec to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVec& v);

}  // namespace quadop::exactla
