#include "quadop/idlang.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace quadop::idlang {

namespace {

struct RawTerm {
  Rational coefficient;
  std::vector<char> code;  // preorder, '\0' = internal node, else a letter
  std::size_t position = 0;
};

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> run(bool& is_equation) {
    std::vector<RawTerm> terms;
    sum(terms, Rational(1));
    skip();
    if (peek() == '=') {
      ++pos_;
      is_equation = true;
      sum(terms, Rational(-1));
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void sum(std::vector<RawTerm>& out, const Rational& side) {
    skip();
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(out, side * sign);
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') break;
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      term(out, side * sign);
    }
  }

  std::optional<Rational> coefficient() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == dstart) fail("expected denominator after '/'");
      const std::string den(text_.substr(dstart, pos_ - dstart));
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        fail("zero denominator");
      }
      Rational q{Integer(digits), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(digits));
  }

  void term(std::vector<RawTerm>& out, const Rational& sign) {
    skip();
    const std::size_t start = pos_;
    auto coef = coefficient();
    skip();
    if (coef && peek() == '*') {
      ++pos_;
      skip();
    }
    if (coef && peek() != '(' && !std::islower(static_cast<unsigned char>(peek()))) {
      if (sgn(*coef) != 0) {
        pos_ = start;
        fail("a constant term must be 0");
      }
      return;
    }
    RawTerm t;
    t.position = start;
    t.coefficient = sign * coef.value_or(Rational(1));
    factor(t.code);
    skip();
    if (peek() == '*') {
      ++pos_;
      std::vector<char> right;
      factor(right);
      t.code.insert(t.code.begin(), '\0');
      t.code.insert(t.code.end(), right.begin(), right.end());
    }
    out.push_back(std::move(t));
  }

  void factor(std::vector<char>& code) {
    skip();
    const char c = peek();
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      code.push_back(c);
      return;
    }
    if (c != '(') fail("expected a letter or '('");
    ++pos_;
    code.push_back('\0');
    factor(code);
    skip();
    if (peek() != '*') fail("products must be binary and fully parenthesized; expected '*'");
    ++pos_;
    factor(code);
    skip();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedIdentity parse(std::string_view text) {
  bool is_equation = false;
  auto terms = IdentityParser(text).run(is_equation);
  if (terms.empty()) throw ParseError("identity has no monomials");

  std::set<char> letters;
  for (const auto& t : terms) {
    std::set<char> seen;
    for (char c : t.code) {
      if (c == '\0') continue;
      if (!seen.insert(c).second) {
        throw ParseError(std::string("term is not multilinear: letter '") + c + "' repeats",
                         t.position);
      }
    }
    if (&t == &terms.front()) {
      letters = seen;
    } else if (seen != letters) {
      throw ParseError("terms use different variable sets", t.position);
    }
  }
  if (letters.size() != kRelationArity) {
    throw ParseError("identities must have arity 3, found " + std::to_string(letters.size()) +
                     " variables");
  }

  std::vector<std::pair<std::uint32_t, Rational>> coords;
  for (const auto& t : terms) {
    std::vector<std::uint8_t> code;
    for (char c : t.code) {
      if (c == '\0') {
        code.push_back(0);
      } else {
        const auto rank = std::distance(letters.begin(), letters.find(c));
        code.push_back(static_cast<std::uint8_t>(rank + 1));
      }
    }
    const auto m = treekit::TreeMonomial::from_code(std::move(code));
    coords.emplace_back(static_cast<std::uint32_t>(m.index()), t.coefficient);
  }
  auto vec = exactla::make_vec(exactla::RationalField{}, kRelationDim, std::move(coords));
  return {LinComb::from_vec(kRelationArity, std::move(vec)), is_equation};
}

LinComb parse_identity(std::string_view text) { return parse(text).value; }

RelationSpace::RelationSpace() { basis_.ncols = kRelationDim; }

RelationSpace RelationSpace::s3_closure(const std::vector<LinComb>& generators,
                                        std::vector<std::string> generator_names) {
  std::vector<exactla::SparseVec> plain;
  std::vector<exactla::SparseVec> closed;
  const auto perms = treekit::permutations(kRelationArity);
  for (const auto& g : generators) {
    if (g.arity != kRelationArity) throw ArgumentError("relations must have arity 3");
    plain.push_back(g.coords);
    for (const auto& sigma : perms) closed.push_back(relabel(g, sigma).coords);
  }
  RelationSpace out;
  out.basis_ = exactla::span_of(kRelationDim, std::move(closed));
  out.names_ = std::move(generator_names);
  out.enlarged_ = exactla::span_of(kRelationDim, std::move(plain)).rank() < out.basis_.rank();
  return out;
}

RelationSpace RelationSpace::from_identities(const std::vector<std::string>& texts) {
  std::vector<LinComb> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_identity(t));
  return s3_closure(gens, texts);
}

RelationSpace RelationSpace::from_basis(exactla::RrefBasis basis,
                                        std::vector<std::string> generator_names) {
  if (basis.ncols != kRelationDim) throw ArgumentError("relation basis must be 12-dimensional");
  std::vector<LinComb> rows;
  for (auto& r : basis.rows) rows.push_back(LinComb::from_vec(kRelationArity, r));
  auto out = s3_closure(rows, std::move(generator_names));
  if (out.dim() != basis.rank()) throw ArgumentError("basis does not span an S3-stable space");
  out.enlarged_ = false;
  return out;
}

RelationSpace RelationSpace::full() {
  std::vector<exactla::SparseVec> rows;
  for (std::uint32_t j = 0; j < kRelationDim; ++j) {
    exactla::SparseVec e(kRelationDim);
    e.push(j, Rational(1));
    rows.push_back(std::move(e));
  }
  RelationSpace out;
  out.basis_ = exactla::span_of(kRelationDim, std::move(rows));
  return out;
}

std::vector<LinComb> RelationSpace::rows() const {
  std::vector<LinComb> out;
  for (const auto& r : basis_.rows) out.push_back(LinComb::from_vec(kRelationArity, r));
  return out;
}

std::vector<std::string> RelationSpace::render_rows() const {
  std::vector<std::string> out;
  for (const auto& r : rows()) out.push_back(r.render());
  return out;
}

bool RelationSpace::contains(const LinComb& v) const {
  if (v.arity != kRelationArity) return false;
  return exactla::member(v.coords, basis_).in_span;
}

RelationSpace opposite_relations(const RelationSpace& r) {
  std::vector<LinComb> mirrored;
  for (const auto& row : r.rows()) mirrored.push_back(mirror(row));
  std::vector<std::string> names;
  for (const auto& n : r.generator_names()) names.push_back("opposite of " + n);
  return RelationSpace::from_basis(
      exactla::span_of(kRelationDim,
                       [&] {
                         std::vector<exactla::SparseVec> v;
                         for (auto& m : mirrored) v.push_back(m.coords);
                         return v;
                       }()),
      std::move(names));
}

}  // namespace quadop::idlang
