#include "quadop/lincomb.hpp"

#include <utility>
#include <vector>

#include "quadop/error.hpp"
#include "quadop/field.hpp"

namespace quadop {

namespace {

template <class Map>
LinComb map_terms(const LinComb& v, Map&& f) {
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  terms.reserve(v.coords.nnz());
  for (std::size_t i = 0; i < v.coords.nnz(); ++i) {
    const auto m = treekit::TreeMonomial::from_index(v.arity, v.coords.cols[i]);
    terms.emplace_back(static_cast<std::uint32_t>(f(m).index()), v.coords.vals[i]);
  }
  return LinComb::from_vec(v.arity, exactla::make_vec(exactla::RationalField{},
                                                      v.coords.dimension, std::move(terms)));
}

}  // namespace

LinComb LinComb::zero(unsigned arity) {
  return {arity, exactla::SparseVec(treekit::monomial_count(arity))};
}

LinComb LinComb::monomial(const treekit::TreeMonomial& m, Rational coefficient) {
  LinComb out = zero(m.arity());
  if (sgn(coefficient) != 0) {
    out.coords.push(static_cast<std::uint32_t>(m.index()), std::move(coefficient));
  }
  return out;
}

LinComb LinComb::from_vec(unsigned arity, exactla::SparseVec v) {
  if (v.dimension != treekit::monomial_count(arity)) {
    throw ArgumentError("vector dimension does not match arity " + std::to_string(arity));
  }
  return {arity, std::move(v)};
}

std::string LinComb::render() const {
  if (coords.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coords.nnz(); ++i) {
    const Rational& c = coords.vals[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + " ";
    out += treekit::TreeMonomial::from_index(arity, coords.cols[i]).render();
  }
  return out;
}

LinComb relabel(const LinComb& v, std::span<const unsigned> sigma) {
  return map_terms(v, [&](const treekit::TreeMonomial& m) { return treekit::relabel(m, sigma); });
}

LinComb mirror(const LinComb& v) {
  return map_terms(v, [](const treekit::TreeMonomial& m) { return treekit::mirror(m); });
}

LinComb operator+(const LinComb& x, const LinComb& y) {
  if (x.arity != y.arity) throw ArgumentError("cannot add combinations of different arity");
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  for (const auto* v : {&x, &y}) {
    for (std::size_t i = 0; i < v->coords.nnz(); ++i) {
      terms.emplace_back(v->coords.cols[i], v->coords.vals[i]);
    }
  }
  return LinComb::from_vec(x.arity, exactla::make_vec(exactla::RationalField{},
                                                      x.coords.dimension, std::move(terms)));
}

LinComb operator-(const LinComb& x) {
  LinComb out = x;
  for (auto& v : out.coords.vals) v = -v;
  return out;
}

LinComb operator-(const LinComb& x, const LinComb& y) { return x + (-y); }

}  // namespace quadop
