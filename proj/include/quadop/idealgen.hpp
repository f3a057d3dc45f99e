#pragma once

// Arity-n components of the operadic ideal generated by an arity-3 relation
// space, and the dimensions of the quotient operad.

#include <cstdint>
#include <string>
#include <vector>

#include "quadop/exactla.hpp"
#include "quadop/idlang.hpp"

namespace quadop::idealgen {

/// direct: every monomial context around r(t1, t2, t3), assembled from
/// scratch at each arity. recursive: I(n) from single grafts of the stored
/// basis of I(n-1) with the binary generator, compressed through RREF.
enum class Method { direct, recursive };

std::string to_string(Method m);
Method parse_method(const std::string& s);

/// How ranks are computed. `automatic` uses rationals up to arity 4 and two
/// independent primes from arity 5 on, failing on disagreement.
struct FieldStrategy {
  enum class Kind { rational, prime, automatic };
  Kind kind = Kind::automatic;
  std::uint32_t prime = 0;

  static FieldStrategy automatic() { return {}; }
  static FieldStrategy rationals() { return {Kind::rational, 0}; }
  static FieldStrategy modp(std::uint32_t p) { return {Kind::prime, p}; }
  /// "rational", "prime:P" or "auto".
  static FieldStrategy parse(const std::string& s);
  std::string name() const;
};

inline constexpr unsigned kDefaultArityCap = 6;
inline constexpr unsigned kExperimentalArityCap = 7;
inline constexpr unsigned kRationalAutoLimit = 4;

struct Options {
  Method method = Method::recursive;
  FieldStrategy field = FieldStrategy::automatic();
  unsigned arity_cap = kDefaultArityCap;
  exactla::Exec exec = exactla::Exec::parallel;
};

struct DimEntry {
  unsigned arity = 0;
  std::uint64_t dim = 0;
  Method method = Method::recursive;
  std::string field;
};

struct DimTable {
  std::string operad;
  std::vector<DimEntry> entries;

  std::vector<std::uint64_t> dims() const;
};

/// Spanning rows of I(n) over Q in the arity-n monomial basis.
/// Throws ArgumentError for n < 3 and CapacityError for n > arity_cap.
exactla::SparseMat consequences(const idlang::RelationSpace& r, unsigned n, Method method,
                                unsigned arity_cap = kDefaultArityCap,
                                exactla::Exec exec = exactla::Exec::parallel);

/// RREF bases of I(3), ..., I(max_arity) over `field`.
template <class Field>
std::vector<exactla::BasicRrefBasis<typename Field::Elem>> ideal_chain(
    const idlang::RelationSpace& r, unsigned max_arity, Method method, const Field& field,
    exactla::Exec exec = exactla::Exec::parallel);

/// rank I(n) over a single field.
std::uint64_t ideal_rank(const idlang::RelationSpace& r, unsigned n, Method method,
                         exactla::FieldSpec field, unsigned arity_cap = kDefaultArityCap,
                         exactla::Exec exec = exactla::Exec::parallel);

/// dim P(k) for k = 1..max_arity.
DimTable dims(const idlang::RelationSpace& r, unsigned max_arity, const Options& options = {},
              std::string operad_name = "");

}  // namespace quadop::idealgen
