#include <doctest.h>

#include <random>

#include "quadop/genseries.hpp"
#include "quadop/koszul.hpp"
#include "quadop/presets.hpp"

using namespace quadop;
using namespace quadop::genseries;

namespace {

TruncSeries series(std::initializer_list<Rational> cs) { return TruncSeries{cs}; }

idlang::RelationSpace space(const char* name) {
  return presets::relation_space(presets::preset(name));
}

TruncSeries random_series(std::mt19937_64& rng, unsigned order) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  TruncSeries s;
  for (unsigned k = 0; k < order; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    s.coeffs.push_back(q);
  }
  return s;
}

}  // namespace

TEST_CASE("hilbert_series examples") {
  CHECK(hilbert_series({1, 2, 6, 20, 70}) ==
        series({-1, 1, -1, Rational(5, 6), Rational(-7, 12)}));
  CHECK(hilbert_series({1}) == series({-1}));
  CHECK(hilbert_series({1, 2, 6, 24, 120}) == series({-1, 1, -1, 1, -1}));
}

TEST_CASE("hilbert_series from a table rejects gaps") {
  idealgen::DimTable t;
  t.entries = {{1, 1, idealgen::Method::recursive, "exact"},
               {3, 6, idealgen::Method::recursive, "rational"}};
  CHECK_THROWS_AS(hilbert_series(t), ArgumentError);
  t.entries = {{1, 1, idealgen::Method::recursive, "exact"},
               {2, 2, idealgen::Method::recursive, "exact"}};
  CHECK(hilbert_series(t) == series({-1, 1}));
}

TEST_CASE("compose examples") {
  CHECK(compose(series({-1}), series({-1}), 1) == identity(1));
  const auto h = hilbert_series({1, 2, 6, 20, 70});
  CHECK(compose(h, h, 5) == series({1, 0, 0, 0, Rational(1, 6)}));
  const auto ass = hilbert_series({1, 2, 6, 24, 120, 720});
  CHECK(compose(ass, ass, 6) == identity(6));
}

TEST_CASE("compose checks orders") {
  CHECK_THROWS_AS(compose(series({1, 2}), series({1, 2, 3}), 3), ArgumentError);
  CHECK_THROWS_AS(compose(series({1, 2, 3}), series({1}), 2), ArgumentError);
  // Longer inputs are truncated.
  CHECK(compose(series({1, 1, 1}), identity(3), 2) == series({1, 1}));
}

TEST_CASE("compose is associative and has t as identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned n = 1 + rng() % 6;
    const auto f = random_series(rng, n), g = random_series(rng, n), h = random_series(rng, n);
    CHECK(compose(compose(f, g, n), h, n) == compose(f, compose(g, h, n), n));
    CHECK(compose(f, identity(n), n) == f);
    CHECK(compose(identity(n), f, n) == f);
  }
}

TEST_CASE("render") {
  CHECK(series({1, 0, 0, 0, Rational(1, 6)}).render() == "t + 1/6 t^5 + O(t^6)");
  CHECK(series({-1, 1}).render() == "-t + t^2 + O(t^3)");
  CHECK(series({0, 0}).render() == "0 + O(t^3)");
}

TEST_CASE("koszul_obstruction examples") {
  const auto nr = koszul_obstruction(space("novikov-right"), 5);
  CHECK(nr.verdict == Verdict::not_koszul);
  CHECK(nr.order == 5u);
  CHECK(nr.coefficient == Rational(1, 6));
  CHECK(nr.dims.dims() == std::vector<std::uint64_t>{1, 2, 6, 20, 70});
  CHECK(nr.dual_dims.dims() == std::vector<std::uint64_t>{1, 2, 6, 20, 70});

  const auto nl = koszul_obstruction(space("novikov-left"), 5);
  CHECK(nl.verdict == Verdict::not_koszul);
  CHECK(nl.order == 5u);
  CHECK(nl.coefficient == Rational(1, 6));

  const auto ass = koszul_obstruction(space("assoc"), 5);
  CHECK(ass.verdict == Verdict::inconclusive);
  CHECK_FALSE(ass.order.has_value());
  CHECK(ass.composite == identity(5));

  const auto magma = koszul_obstruction(space("magma"), 4);
  CHECK(magma.verdict == Verdict::inconclusive);
  CHECK(magma.dual_dims.dims() == std::vector<std::uint64_t>{1, 2, 0, 0});
  CHECK(to_string(Verdict::not_koszul) == "not-koszul");
}

TEST_CASE("coefficient of t is one and arity-3 dims are complementary") {
  for (const auto& [name, doc] : presets::registry()) {
    CAPTURE(name);
    const auto r = presets::relation_space(doc);
    const auto ob = koszul_obstruction(r, 3);
    CHECK(ob.composite.coefficient(1) == 1);
    CHECK(ob.dims.dims()[2] + ob.dual_dims.dims()[2] == 12);
    CHECK(ob.dual_dims.dims()[2] == r.dim());
  }
}
