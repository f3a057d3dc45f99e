#pragma once

#include <gmpxx.h>

#include <string>

namespace quadop {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace quadop
