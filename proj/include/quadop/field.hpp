#pragma once

// Coefficient fields for the elimination kernels. Both expose the same small
// vocabulary so the kernels are written once as templates.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "quadop/error.hpp"
#include "quadop/rational.hpp"

namespace quadop::exactla {

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  Elem from_rational(const Rational& q) const { return q; }
  Rational to_rational(const Elem& x) const { return x; }
  Elem inv(const Elem& x) const { return Elem(1) / x; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void add_to(Elem& acc, const Elem& x) const { acc += x; }
  /// acc -= f * x
  void sub_mul(Elem& acc, const Elem& f, const Elem& x) const { acc -= f * x; }
  std::size_t hash(const Elem& x) const {
    const auto n = mpz_get_si(x.get_num_mpz_t());
    const auto d = mpz_get_ui(x.get_den_mpz_t());
    return std::hash<long>{}(n) * 31u + std::hash<unsigned long>{}(d);
  }
  std::string name() const { return "rational"; }
};

/// Z/pZ for a prime p < 2^31; products fit in 64 bits.
struct PrimeField {
  using Elem = std::uint32_t;

  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime < 3 || prime >= (1u << 31)) throw ArgumentError("prime must lie in [3, 2^31)");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem x) const { return x == 0; }

  Elem from_integer(const Integer& z) const {
    return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), p));
  }
  Elem from_rational(const Rational& q) const {
    const Elem den = from_integer(q.get_den());
    if (den == 0) {
      throw FieldError("prime " + std::to_string(p) + " divides the denominator of " +
                       q.get_str() + "; choose a different prime");
    }
    return mul(from_integer(q.get_num()), inv(den));
  }
  /// Symmetric lift; only meaningful for small values.
  Rational to_rational(Elem x) const {
    return x > p / 2 ? Rational(-static_cast<long>(p - x)) : Rational(static_cast<long>(x));
  }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p - 2;
    while (e > 0) {
      if (e & 1u) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }
  void add_to(Elem& acc, Elem x) const {
    const std::uint64_t s = static_cast<std::uint64_t>(acc) + x;
    acc = static_cast<Elem>(s >= p ? s - p : s);
  }
  void sub_mul(Elem& acc, Elem f, Elem x) const {
    const std::uint64_t prod = static_cast<std::uint64_t>(f) * x % p;
    acc = static_cast<Elem>(acc >= prod ? acc - prod : acc + p - prod);
  }
  std::size_t hash(Elem x) const { return std::hash<Elem>{}(x); }
  std::string name() const { return "prime:" + std::to_string(p); }
};

}  // namespace quadop::exactla
