#include "quadop/genseries.hpp"

#include "quadop/koszul.hpp"
#include "quadop/treekit.hpp"

namespace quadop::genseries {

Rational TruncSeries::coefficient(unsigned k) const {
  if (k == 0) throw ArgumentError("series have no constant term");
  return k <= coeffs.size() ? coeffs[k - 1] : Rational(0);
}

std::string TruncSeries::render() const {
  std::string out;
  for (unsigned k = 1; k <= order(); ++k) {
    const Rational& c = coeffs[k - 1];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

TruncSeries identity(unsigned order) {
  TruncSeries s{std::vector<Rational>(order, Rational(0))};
  if (order > 0) s.coeffs[0] = 1;
  return s;
}

TruncSeries hilbert_series(const std::vector<std::uint64_t>& dims) {
  TruncSeries s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const unsigned n = static_cast<unsigned>(i + 1);
    Rational c{Integer(dims[i]), Integer(treekit::factorial(n))};
    c.canonicalize();
    s.coeffs.push_back(n % 2 == 0 ? c : Rational(-c));
  }
  return s;
}

TruncSeries hilbert_series(const idealgen::DimTable& d) {
  std::vector<std::uint64_t> dims;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (d.entries[i].arity != i + 1) {
      throw ArgumentError("dimension table has a gap at arity " + std::to_string(i + 1));
    }
    dims.push_back(d.entries[i].dim);
  }
  return hilbert_series(dims);
}

namespace {

// Product of two series truncated at `order`; index k holds t^(k+1).
std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               unsigned order) {
  std::vector<Rational> out(order, Rational(0));
  for (unsigned i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; j < b.size() && i + j + 2 <= order; ++j) {
      out[i + j + 1] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

TruncSeries compose(const TruncSeries& f, const TruncSeries& g, unsigned order) {
  if (f.order() < order || g.order() < order) {
    throw ArgumentError("compose needs both series to order " + std::to_string(order) +
                        ", got " + std::to_string(f.order()) + " and " +
                        std::to_string(g.order()));
  }
  const std::vector<Rational> inner(g.coeffs.begin(), g.coeffs.begin() + order);
  TruncSeries out{std::vector<Rational>(order, Rational(0))};
  std::vector<Rational> power = inner;  // g^k, starting at k = 1
  for (unsigned k = 1; k <= order; ++k) {
    const Rational& fk = f.coeffs[k - 1];
    if (sgn(fk) != 0) {
      for (unsigned j = 0; j < order; ++j) out.coeffs[j] += fk * power[j];
    }
    if (k < order) power = multiply(power, inner, order);
  }
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::not_koszul ? "not-koszul" : "inconclusive";
}

Obstruction koszul_obstruction(const idlang::RelationSpace& r, unsigned order,
                               const idealgen::Options& options,
                               const std::string& operad_name) {
  if (order == 0) throw ArgumentError("order must be positive");
  Obstruction out;
  out.dims = idealgen::dims(r, order, options, operad_name);
  const auto dual = koszul::koszul_dual(r);
  out.dual_dims = idealgen::dims(dual, order, options, operad_name.empty() ? "" : operad_name + "!");
  out.composite = compose(hilbert_series(out.dims), hilbert_series(out.dual_dims), order);
  const auto id = identity(order);
  for (unsigned k = 1; k <= order; ++k) {
    const Rational diff = out.composite.coefficient(k) - id.coefficient(k);
    if (sgn(diff) != 0) {
      out.verdict = Verdict::not_koszul;
      out.order = k;
      out.coefficient = diff;
      break;
    }
  }
  return out;
}

}  // namespace quadop::genseries
