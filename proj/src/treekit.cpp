#include "quadop/treekit.hpp"

#include <algorithm>
#include <numeric>

#include "quadop/error.hpp"

namespace quadop::treekit {

namespace {

// One past the last code position of the subtree rooted at `pos`.
std::size_t subtree_end(std::span<const std::uint8_t> code, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    if (code[pos] == 0) {
      ++need;
    } else {
      --need;
    }
    ++pos;
  }
  return pos;
}

// Like subtree_end(0) but never reads past the end; returns npos-like
// code.size() + 1 when the code is truncated.
std::size_t subtree_end_checked(std::span<const std::uint8_t> code) {
  std::size_t need = 1;
  std::size_t pos = 0;
  while (need > 0) {
    if (pos >= code.size()) return code.size() + 1;
    need = code[pos] == 0 ? need + 1 : need - 1;
    ++pos;
  }
  return pos;
}

unsigned leaf_count(std::span<const std::uint8_t> code) {
  return static_cast<unsigned>(std::count_if(code.begin(), code.end(),
                                             [](std::uint8_t c) { return c != 0; }));
}

// Number of shapes with n leaves whose left subtree has more than k leaves.
std::uint64_t shape_offset(unsigned n, unsigned k) {
  std::uint64_t off = 0;
  for (unsigned j = k + 1; j < n; ++j) off += catalan(j - 1) * catalan(n - j - 1);
  return off;
}

std::uint64_t rank_shape(std::span<const std::uint8_t> code, std::size_t pos) {
  if (code[pos] != 0) return 0;
  const std::size_t left_begin = pos + 1;
  const std::size_t left_end = subtree_end(code, left_begin);
  const std::size_t right_end = subtree_end(code, left_end);
  const unsigned k = leaf_count(code.subspan(left_begin, left_end - left_begin));
  const unsigned n = leaf_count(code.subspan(pos, right_end - pos));
  return shape_offset(n, k) + rank_shape(code, left_begin) * catalan(n - k - 1) +
         rank_shape(code, left_end);
}

// Appends the preorder code of shape number `rank` with n leaves; leaves get
// the placeholder value 1.
void unrank_shape(unsigned n, std::uint64_t rank, std::vector<std::uint8_t>& out) {
  if (n == 1) {
    out.push_back(1);
    return;
  }
  for (unsigned k = n - 1; k >= 1; --k) {
    const std::uint64_t right_count = catalan(n - k - 1);
    const std::uint64_t block = catalan(k - 1) * right_count;
    if (rank < block) {
      out.push_back(0);
      unrank_shape(k, rank / right_count, out);
      unrank_shape(n - k, rank % right_count, out);
      return;
    }
    rank -= block;
  }
}

void check_arity(unsigned n) {
  if (n == 0) throw ArgumentError("arity must be positive");
  if (n > kHardMaxArity) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the hard limit " +
                        std::to_string(kHardMaxArity));
  }
}

void mirror_into(std::span<const std::uint8_t> code, std::size_t pos,
                 std::vector<std::uint8_t>& out) {
  if (code[pos] != 0) {
    out.push_back(code[pos]);
    return;
  }
  const std::size_t left_end = subtree_end(code, pos + 1);
  out.push_back(0);
  mirror_into(code, left_end, out);
  mirror_into(code, pos + 1, out);
}

void render_into(std::span<const std::uint8_t> code, std::size_t pos, std::string& out) {
  if (code[pos] != 0) {
    const unsigned label = code[pos];
    out.push_back(label <= 26 ? static_cast<char>('a' + label - 1) : '?');
    return;
  }
  const std::size_t left_end = subtree_end(code, pos + 1);
  out.push_back('(');
  render_into(code, pos + 1, out);
  out.push_back('*');
  render_into(code, left_end, out);
  out.push_back(')');
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  std::vector<std::uint8_t> run() {
    std::vector<std::uint8_t> code;
    node(code);
    skip_space();
    // The outermost product may be written without parentheses.
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      code.insert(code.begin(), 0);
      node(code);
      skip_space();
    }
    if (pos_ != text_.size()) throw ParseError("trailing characters in monomial", pos_);
    return code;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "' in monomial", pos_);
    }
    ++pos_;
  }

  void node(std::vector<std::uint8_t>& code) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of monomial", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      code.push_back(0);
      node(code);
      expect('*');
      node(code);
      expect(')');
    } else if (c >= 'a' && c <= 'z') {
      ++pos_;
      code.push_back(static_cast<std::uint8_t>(c - 'a' + 1));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in monomial", pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw CapacityError("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t catalan(unsigned k) {
  // C_{i+1} = C_i * 2(2i+1) / (i+2), exact in 64 bits for the arities we allow.
  std::uint64_t c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::uint64_t monomial_count(unsigned n) {
  check_arity(n);
  return factorial(n) * catalan(n - 1);
}

TreeMonomial::TreeMonomial(std::vector<std::uint8_t> code)
    : code_(std::move(code)), arity_(leaf_count(code_)) {}

TreeMonomial TreeMonomial::from_code(std::vector<std::uint8_t> code) {
  if (code.empty() || subtree_end_checked(code) != code.size()) {
    throw ArgumentError("malformed preorder tree code");
  }
  return TreeMonomial(std::move(code));
}

TreeMonomial TreeMonomial::leaf(unsigned label) {
  if (label == 0 || label > 255) throw ArgumentError("leaf label out of range");
  return TreeMonomial({static_cast<std::uint8_t>(label)});
}

TreeMonomial TreeMonomial::join(const TreeMonomial& left, const TreeMonomial& right) {
  std::vector<std::uint8_t> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(0);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return TreeMonomial(std::move(code));
}

TreeMonomial TreeMonomial::from_index(unsigned arity, std::uint64_t index) {
  check_arity(arity);
  const std::uint64_t nfact = factorial(arity);
  if (index >= monomial_count(arity)) throw ArgumentError("monomial index out of range");
  std::vector<std::uint8_t> code;
  code.reserve(2 * arity - 1);
  unrank_shape(arity, index / nfact, code);

  // Lehmer decoding of the label rank.
  std::vector<unsigned> pool(arity);
  std::iota(pool.begin(), pool.end(), 1u);
  std::uint64_t rank = index % nfact;
  std::vector<unsigned> labels;
  labels.reserve(arity);
  for (unsigned i = arity; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    labels.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::size_t next = 0;
  for (auto& c : code) {
    if (c != 0) c = static_cast<std::uint8_t>(labels[next++]);
  }
  return TreeMonomial(std::move(code));
}

TreeMonomial TreeMonomial::parse(std::string_view text) {
  TreeMonomial m(TreeParser(text).run());
  if (!m.is_multilinear()) throw ParseError("monomial is not multilinear");
  return m;
}

bool TreeMonomial::is_multilinear() const {
  if (arity_ == 0) return false;
  std::vector<bool> seen(arity_ + 1, false);
  for (auto c : code_) {
    if (c == 0) continue;
    if (c > arity_ || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

std::vector<unsigned> TreeMonomial::labels() const {
  std::vector<unsigned> out;
  out.reserve(arity_);
  for (auto c : code_) {
    if (c != 0) out.push_back(c);
  }
  return out;
}

TreeMonomial TreeMonomial::left() const {
  if (is_leaf()) throw ArgumentError("a leaf has no children");
  const std::size_t end = subtree_end(code_, 1);
  return TreeMonomial(std::vector<std::uint8_t>(code_.begin() + 1, code_.begin() + end));
}

TreeMonomial TreeMonomial::right() const {
  if (is_leaf()) throw ArgumentError("a leaf has no children");
  const std::size_t end = subtree_end(code_, 1);
  return TreeMonomial(std::vector<std::uint8_t>(code_.begin() + end, code_.end()));
}

std::uint64_t TreeMonomial::shape_rank() const { return rank_shape(code_, 0); }

std::uint64_t TreeMonomial::label_rank() const {
  if (!is_multilinear()) throw ArgumentError("label rank needs a multilinear monomial");
  const auto seq = labels();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < seq.size(); ++j) smaller += seq[j] < seq[i];
    rank += smaller * factorial(static_cast<unsigned>(seq.size() - i - 1));
  }
  return rank;
}

std::uint64_t TreeMonomial::index() const {
  return shape_rank() * factorial(arity_) + label_rank();
}

std::string TreeMonomial::render() const {
  std::string out;
  out.reserve(code_.size() * 2);
  if (!code_.empty()) render_into(code_, 0, out);
  return out;
}

std::vector<TreeMonomial> enumerate_multilinear(unsigned n, unsigned max_arity) {
  check_arity(n);
  if (n > max_arity) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the configured maximum " +
                        std::to_string(max_arity));
  }
  const std::uint64_t count = monomial_count(n);
  std::vector<TreeMonomial> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(TreeMonomial::from_index(n, k));
  return out;
}

TreeMonomial graft(const TreeMonomial& outer, unsigned slot, const TreeMonomial& inner) {
  if (!outer.is_multilinear() || !inner.is_multilinear()) {
    throw ArgumentError("graft needs multilinear operands");
  }
  const unsigned k = outer.arity();
  const unsigned m = inner.arity();
  if (slot < 1 || slot > k) {
    throw ArgumentError("graft slot " + std::to_string(slot) + " outside 1.." + std::to_string(k));
  }
  if (k + m - 1 > 255) throw CapacityError("grafted tree too large");
  std::vector<std::uint8_t> code;
  code.reserve(outer.code().size() + inner.code().size());
  for (auto c : outer.code()) {
    if (c == 0 || c < slot) {
      code.push_back(c);
    } else if (c > slot) {
      code.push_back(static_cast<std::uint8_t>(c + m - 1));
    } else {
      for (auto d : inner.code()) {
        code.push_back(d == 0 ? 0 : static_cast<std::uint8_t>(d + slot - 1));
      }
    }
  }
  return TreeMonomial::from_code(std::move(code));
}

TreeMonomial relabel(const TreeMonomial& m, std::span<const unsigned> sigma) {
  if (sigma.size() != m.arity()) {
    throw ArgumentError("relabel: permutation size " + std::to_string(sigma.size()) +
                        " does not match arity " + std::to_string(m.arity()));
  }
  std::vector<bool> hit(sigma.size() + 1, false);
  for (auto s : sigma) {
    if (s < 1 || s > sigma.size() || hit[s]) throw ArgumentError("relabel: not a permutation");
    hit[s] = true;
  }
  std::vector<std::uint8_t> code(m.code().begin(), m.code().end());
  for (auto& c : code) {
    if (c == 0) continue;
    if (c > sigma.size()) throw ArgumentError("relabel: monomial is not multilinear");
    c = static_cast<std::uint8_t>(sigma[c - 1]);
  }
  return TreeMonomial::from_code(std::move(code));
}

TreeMonomial mirror(const TreeMonomial& m) {
  std::vector<std::uint8_t> code;
  code.reserve(m.code().size());
  if (!m.code().empty()) mirror_into(m.code(), 0, code);
  return TreeMonomial::from_code(std::move(code));
}

int permutation_sign(std::span<const unsigned> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

std::vector<std::vector<unsigned>> permutations(unsigned n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1u);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace quadop::treekit
