#pragma once

// Truncated exponential generating series with the alternating sign
// convention c_n = (-1)^n dim P(n) / n!, their composition, and the
// series-inversion test that can rule out Koszulness.

#include <optional>
#include <string>
#include <vector>

#include "quadop/idealgen.hpp"
#include "quadop/idlang.hpp"
#include "quadop/rational.hpp"

namespace quadop::genseries {

/// c_1 t + ... + c_N t^N. The constant term is always zero.
struct TruncSeries {
  std::vector<Rational> coeffs;  // coeffs[k] is the coefficient of t^(k+1)

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs.size()); }
  /// Coefficient of t^k for 1 <= k <= order(); zero beyond.
  Rational coefficient(unsigned k) const;
  std::string render() const;
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;
};

/// The identity series t truncated at `order`.
TruncSeries identity(unsigned order);

/// Throws ArgumentError unless the table covers arities 1..N contiguously.
TruncSeries hilbert_series(const idealgen::DimTable& d);
TruncSeries hilbert_series(const std::vector<std::uint64_t>& dims);

/// f(g(t)) through t^order. Throws ArgumentError when either input is
/// shorter than `order`.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g, unsigned order);

enum class Verdict { not_koszul, inconclusive };
std::string to_string(Verdict v);

struct Obstruction {
  Verdict verdict = Verdict::inconclusive;
  /// First k >= 1 where H(H^!(t)) - t has a nonzero coefficient.
  std::optional<unsigned> order;
  std::optional<Rational> coefficient;
  idealgen::DimTable dims;
  idealgen::DimTable dual_dims;
  TruncSeries composite;
};

/// Compares H(H^!(t)) against t through `order`. Never claims Koszulness.
Obstruction koszul_obstruction(const idlang::RelationSpace& r, unsigned order,
                               const idealgen::Options& options = {},
                               const std::string& operad_name = "");

}  // namespace quadop::genseries
