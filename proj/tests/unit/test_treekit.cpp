#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quadop/error.hpp"
#include "quadop/treekit.hpp"

using namespace quadop;
using namespace quadop::treekit;

namespace {

TreeMonomial T(const char* s) { return TreeMonomial::parse(s); }

// A random multilinear monomial of arity n, by index.
TreeMonomial random_monomial(unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, monomial_count(n) - 1);
  return TreeMonomial::from_index(n, pick(rng));
}

std::vector<unsigned> compose_perm(const std::vector<unsigned>& tau,
                                   const std::vector<unsigned>& sigma) {
  std::vector<unsigned> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = tau[sigma[i] - 1];
  return out;
}

}  // namespace

TEST_CASE("counts match n! times Catalan(n-1)") {
  const std::uint64_t expected[] = {1, 2, 12, 120, 1680, 30240, 665280};
  for (unsigned n = 1; n <= 7; ++n) CHECK(monomial_count(n) == expected[n - 1]);
  for (unsigned n = 1; n <= 5; ++n) CHECK(enumerate_multilinear(n).size() == expected[n - 1]);
}

TEST_CASE("enumeration order in arity 1 and 3") {
  const auto one = enumerate_multilinear(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_leaf());
  CHECK(one[0].render() == "a");

  const auto three = enumerate_multilinear(3);
  CHECK(three[0].render() == "((a*b)*c)");
  CHECK(three[6].render() == "(a*(b*c))");
  CHECK(three[1].render() == "((a*c)*b)");
  CHECK(three[11].render() == "(c*(b*a))");
  for (unsigned k = 0; k < 6; ++k) CHECK(three[k].shape_rank() == 0);
  for (unsigned k = 6; k < 12; ++k) CHECK(three[k].shape_rank() == 1);
}

TEST_CASE("enumeration has no duplicates and round-trips the index") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto all = enumerate_multilinear(n);
    std::set<TreeMonomial> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (std::uint64_t k = 0; k < all.size(); ++k) {
      CHECK(all[k].index() == k);
      CHECK(TreeMonomial::from_index(n, k) == all[k]);
      CHECK(all[k].is_multilinear());
    }
  }
}

TEST_CASE("shapes are ordered by left subtree size descending") {
  const auto four = enumerate_multilinear(4);
  std::vector<unsigned> left_sizes;
  for (std::size_t k = 0; k < four.size(); k += 24) left_sizes.push_back(four[k].left().arity());
  CHECK(left_sizes == std::vector<unsigned>{3, 3, 2, 1, 1});
  CHECK(four[0].render() == "(((a*b)*c)*d)");
  CHECK(four[24].render() == "((a*(b*c))*d)");
  CHECK(four[48].render() == "((a*b)*(c*d))");
  CHECK(four[72].render() == "(a*((b*c)*d))");
  CHECK(four[96].render() == "(a*(b*(c*d)))");
}

TEST_CASE("enumeration beyond the maximum arity is a capacity error") {
  CHECK_THROWS_AS(enumerate_multilinear(8), CapacityError);
  CHECK_THROWS_AS(enumerate_multilinear(5, 4), CapacityError);
  try {
    enumerate_multilinear(8);
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find('7') != std::string::npos);
  }
}

TEST_CASE("graft examples") {
  const auto ab = T("a*b");
  CHECK(graft(TreeMonomial::leaf(1), 1, T("(a*b)*c")) == T("(a*b)*c"));
  CHECK(graft(ab, 1, ab) == T("(a*b)*c"));
  CHECK(graft(ab, 2, ab) == T("a*(b*c)"));
  // Labels of the outer tree above the slot shift past the inner block.
  CHECK(graft(T("b*a"), 1, T("b*a")) == T("c*(b*a)"));
  CHECK(graft(T("c*(a*b)"), 1, T("b*a")) == T("d*((b*a)*c)"));
  CHECK(graft(T("c*(a*b)"), 3, T("b*a")) == T("(d*c)*(a*b)"));
}

TEST_CASE("graft rejects a bad slot") {
  CHECK_THROWS_AS(graft(T("a*b"), 0, T("a*b")), ArgumentError);
  CHECK_THROWS_AS(graft(T("a*b"), 3, T("a*b")), ArgumentError);
}

TEST_CASE("graft satisfies the operadic associativity laws") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<unsigned> ar(1, 3);
    const unsigned k = ar(rng), m = ar(rng), l = ar(rng);
    const auto x = random_monomial(k, rng);
    const auto y = random_monomial(m, rng);
    const auto z = random_monomial(l, rng);
    std::uniform_int_distribution<unsigned> si(1, k), sj(1, m);
    const unsigned i = si(rng), j = sj(rng);

    // Sequential: (x o_i y) o_{i+j-1} z = x o_i (y o_j z).
    CHECK(graft(graft(x, i, y), i + j - 1, z) == graft(x, i, graft(y, j, z)));

    // Parallel: for i < i2, (x o_i y) o_{i2+m-1} z = (x o_i2 z) o_i y.
    if (k >= 2) {
      std::uniform_int_distribution<unsigned> pair(1, k);
      unsigned a = pair(rng), b = pair(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      CHECK(graft(graft(x, a, y), b + m - 1, z) == graft(graft(x, b, z), a, y));
    }
  }
}

TEST_CASE("relabel examples and group action law") {
  const auto m = T("(a*b)*c");
  const std::vector<unsigned> id{1, 2, 3};
  const std::vector<unsigned> swap12{2, 1, 3};
  CHECK(relabel(m, id) == m);
  CHECK(relabel(m, swap12) == T("(b*a)*c"));

  std::mt19937_64 rng(7);
  const auto perms4 = permutations(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_monomial(4, rng);
    const auto& s = perms4[rng() % perms4.size()];
    const auto& t = perms4[rng() % perms4.size()];
    CHECK(relabel(relabel(x, s), t) == relabel(x, compose_perm(t, s)));
  }
}

TEST_CASE("relabel rejects size mismatch and non-permutations") {
  const std::vector<unsigned> short_sigma{2, 1};
  const std::vector<unsigned> repeat{1, 1, 2};
  CHECK_THROWS_AS(relabel(T("(a*b)*c"), short_sigma), ArgumentError);
  CHECK_THROWS_AS(relabel(T("(a*b)*c"), repeat), ArgumentError);
}

TEST_CASE("mirror examples and properties") {
  CHECK(mirror(TreeMonomial::leaf(1)) == TreeMonomial::leaf(1));
  CHECK(mirror(T("a*b")) == T("b*a"));
  CHECK(mirror(T("(a*b)*c")) == T("c*(b*a)"));

  std::mt19937_64 rng(99);
  const auto perms = permutations(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_monomial(5, rng);
    const auto& s = perms[rng() % perms.size()];
    CHECK(mirror(mirror(x)) == x);
    CHECK(mirror(relabel(x, s)) == relabel(mirror(x), s));
  }
}

TEST_CASE("parse and render round-trip") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_multilinear(n)) CHECK(TreeMonomial::parse(m.render()) == m);
  }
  CHECK(T("(a*b)*c") == T("((a*b)*c)"));
  CHECK_THROWS_AS(T("(a*b"), ParseError);
  CHECK_THROWS_AS(T("a*a"), ParseError);
  CHECK_THROWS_AS(T("a*c"), ParseError);
}

TEST_CASE("from_code validates structure") {
  CHECK_THROWS(TreeMonomial::from_code({0, 1}));
  CHECK_THROWS(TreeMonomial::from_code({1, 2}));
  CHECK(TreeMonomial::from_code({0, 1, 2}) == T("a*b"));
}

TEST_CASE("permutations and signs") {
  const auto p3 = permutations(3);
  REQUIRE(p3.size() == 6);
  CHECK(p3.front() == std::vector<unsigned>{1, 2, 3});
  CHECK(p3.back() == std::vector<unsigned>{3, 2, 1});
  CHECK(std::is_sorted(p3.begin(), p3.end()));
  const std::vector<int> signs{1, -1, -1, 1, 1, -1};
  for (std::size_t i = 0; i < 6; ++i) CHECK(permutation_sign(p3[i]) == signs[i]);
}
