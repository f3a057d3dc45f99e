#include "quadop/idealgen.hpp"

#include <array>
#include <span>

#include <omp.h>

#include "quadop/treekit.hpp"

namespace quadop::idealgen {

namespace {

using exactla::BasicRrefBasis;
using exactla::BasicSparseVec;
using exactla::Echelon;
using exactla::Exec;
using treekit::TreeMonomial;

using Code = std::vector<std::uint8_t>;

std::size_t subtree_end(std::span<const std::uint8_t> code, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    need = code[pos] == 0 ? need + 1 : need - 1;
    ++pos;
  }
  return pos;
}

std::uint32_t index_of(Code code) {
  return static_cast<std::uint32_t>(TreeMonomial::from_code(std::move(code)).index());
}

// Rows of I(n) per monomial chunk are produced in parallel and absorbed in
// chunk order.
constexpr std::int64_t kChunk = 2048;

template <class Field>
using RelRows = std::vector<std::vector<std::pair<std::uint32_t, typename Field::Elem>>>;

template <class Field>
RelRows<Field> relation_rows(const idlang::RelationSpace& r, const Field& field) {
  RelRows<Field> out;
  for (const auto& row : r.basis().rows) {
    std::vector<std::pair<std::uint32_t, typename Field::Elem>> terms;
    for (std::size_t i = 0; i < row.nnz(); ++i) {
      terms.emplace_back(row.cols[i], field.from_rational(row.vals[i]));
    }
    out.push_back(std::move(terms));
  }
  return out;
}

// Direct assembly. Every (context, slot, t1, t2, t3, labeling) tuple is the
// monomial M = context[slot <- ((t1*t2)*t3)] together with the node where the
// pattern sits, so walking all monomials and all nodes whose left child is
// internal visits each tuple exactly once. The row is sum_k r_k M[node <- mu_k(t1,t2,t3)].
template <class Field, class Sink>
void generate_direct(const idlang::RelationSpace& r, unsigned n, const Field& field, Exec exec,
                     Sink&& sink) {
  using Elem = typename Field::Elem;
  const std::size_t ncols = treekit::monomial_count(n);
  const auto rel = relation_rows(r, field);
  if (rel.empty()) return;
  std::array<Code, idlang::kRelationDim> mu;
  for (std::uint32_t k = 0; k < idlang::kRelationDim; ++k) {
    const auto m = TreeMonomial::from_index(3, k);
    mu[k].assign(m.code().begin(), m.code().end());
  }

  const auto total = static_cast<std::int64_t>(treekit::monomial_count(n));
  for (std::int64_t start = 0; start < total; start += kChunk) {
    const std::int64_t stop = std::min(total, start + kChunk);
    std::vector<std::vector<BasicSparseVec<Elem>>> buckets(static_cast<std::size_t>(stop - start));
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::parallel)
    for (std::int64_t idx = start; idx < stop; ++idx) {
      const auto m = TreeMonomial::from_index(n, static_cast<std::uint64_t>(idx));
      const auto code = m.code();
      auto& bucket = buckets[static_cast<std::size_t>(idx - start)];
      for (std::size_t pos = 0; pos + 1 < code.size(); ++pos) {
        if (code[pos] != 0 || code[pos + 1] != 0) continue;
        const std::size_t t1 = pos + 2;
        const std::size_t t2 = subtree_end(code, t1);
        const std::size_t t3 = subtree_end(code, t2);
        const std::size_t end = subtree_end(code, t3);
        const std::array<std::span<const std::uint8_t>, 3> parts{
            code.subspan(t1, t2 - t1), code.subspan(t2, t3 - t2), code.subspan(t3, end - t3)};
        std::array<std::uint32_t, idlang::kRelationDim> cols{};
        for (std::size_t k = 0; k < mu.size(); ++k) {
          Code out(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(pos));
          for (auto c : mu[k]) {
            if (c == 0) {
              out.push_back(0);
            } else {
              out.insert(out.end(), parts[c - 1].begin(), parts[c - 1].end());
            }
          }
          out.insert(out.end(), code.begin() + static_cast<std::ptrdiff_t>(end), code.end());
          cols[k] = index_of(std::move(out));
        }
        for (const auto& rrow : rel) {
          std::vector<std::pair<std::uint32_t, Elem>> terms;
          terms.reserve(rrow.size());
          for (const auto& [k, v] : rrow) terms.emplace_back(cols[k], v);
          bucket.push_back(exactla::make_vec(field, ncols, std::move(terms)));
        }
      }
    }
    std::vector<BasicSparseVec<Elem>> rows;
    for (auto& b : buckets) {
      for (auto& v : b) rows.push_back(std::move(v));
    }
    if (!sink(std::move(rows))) return;
  }
}

// Column maps for single grafts of an arity-(n-1) monomial with the binary
// generator, one map per (slot, ordered label pair) and per (root side, label).
std::vector<std::vector<std::uint32_t>> graft_maps(unsigned n) {
  const unsigned prev = n - 1;
  const auto count = static_cast<std::int64_t>(treekit::monomial_count(prev));
  std::vector<Code> codes(static_cast<std::size_t>(count));
  for (std::int64_t j = 0; j < count; ++j) {
    const auto m = TreeMonomial::from_index(prev, static_cast<std::uint64_t>(j));
    codes[static_cast<std::size_t>(j)].assign(m.code().begin(), m.code().end());
  }

  struct Spec {
    unsigned slot;  // 0 = root composition
    unsigned p;
    unsigned q;     // for root composition: q == 0 -> m * p, q == 1 -> p * m
  };
  std::vector<Spec> specs;
  for (unsigned slot = 1; slot <= prev; ++slot) {
    for (unsigned p = 1; p <= n; ++p) {
      for (unsigned q = 1; q <= n; ++q) {
        if (p != q) specs.push_back({slot, p, q});
      }
    }
  }
  for (unsigned x = 1; x <= n; ++x) {
    specs.push_back({0, x, 0});
    specs.push_back({0, x, 1});
  }

  std::vector<std::vector<std::uint32_t>> maps(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(specs.size()); ++s) {
    const Spec spec = specs[static_cast<std::size_t>(s)];
    // Order-preserving map from the surviving old labels onto the free new ones.
    std::vector<std::uint8_t> remap(prev + 1, 0);
    std::vector<unsigned> free_labels;
    for (unsigned l = 1; l <= n; ++l) {
      const bool used = spec.slot == 0 ? l == spec.p : (l == spec.p || l == spec.q);
      if (!used) free_labels.push_back(l);
    }
    std::size_t next = 0;
    for (unsigned l = 1; l <= prev; ++l) {
      if (l == spec.slot) continue;
      remap[l] = static_cast<std::uint8_t>(free_labels[next++]);
    }
    auto& map = maps[static_cast<std::size_t>(s)];
    map.resize(codes.size());
    for (std::size_t j = 0; j < codes.size(); ++j) {
      Code out;
      out.reserve(codes[j].size() + 2);
      if (spec.slot == 0) {
        out.push_back(0);
        if (spec.q == 1) out.push_back(static_cast<std::uint8_t>(spec.p));
        for (auto c : codes[j]) out.push_back(c == 0 ? 0 : remap[c]);
        if (spec.q == 0) out.push_back(static_cast<std::uint8_t>(spec.p));
      } else {
        for (auto c : codes[j]) {
          if (c == 0) {
            out.push_back(0);
          } else if (c == spec.slot) {
            out.push_back(0);
            out.push_back(static_cast<std::uint8_t>(spec.p));
            out.push_back(static_cast<std::uint8_t>(spec.q));
          } else {
            out.push_back(remap[c]);
          }
        }
      }
      map[j] = index_of(std::move(out));
    }
  }
  return maps;
}

// Recursive assembly: I(n) is spanned by the grafts b o_i mu and mu o_i b for
// b in a basis of I(n-1) and mu the binary generator, over all labelings.
// Relabelings of b itself are not needed because I(n-1) is S_{n-1}-stable and
// b ranges over a basis.
template <class Elem, class Sink>
void generate_recursive(const BasicRrefBasis<Elem>& previous, unsigned n, Exec exec,
                        Sink&& sink) {
  if (previous.rank() == 0) return;
  const std::size_t ncols = treekit::monomial_count(n);
  const auto maps = graft_maps(n);
  const auto basis_rows = static_cast<std::int64_t>(previous.rank());
  const std::int64_t step = std::max<std::int64_t>(1, kChunk * 4 / static_cast<std::int64_t>(maps.size()));
  for (std::int64_t start = 0; start < basis_rows; start += step) {
    const std::int64_t stop = std::min(basis_rows, start + step);
    std::vector<std::vector<BasicSparseVec<Elem>>> buckets(static_cast<std::size_t>(stop - start));
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (std::int64_t b = start; b < stop; ++b) {
      const auto& src = previous.rows[static_cast<std::size_t>(b)];
      auto& bucket = buckets[static_cast<std::size_t>(b - start)];
      bucket.reserve(maps.size());
      std::vector<std::pair<std::uint32_t, Elem>> terms(src.nnz());
      for (const auto& map : maps) {
        for (std::size_t i = 0; i < src.nnz(); ++i) terms[i] = {map[src.cols[i]], src.vals[i]};
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        BasicSparseVec<Elem> v(ncols);
        v.cols.reserve(terms.size());
        v.vals.reserve(terms.size());
        for (const auto& [c, x] : terms) v.push(c, x);
        bucket.push_back(std::move(v));
      }
    }
    std::vector<BasicSparseVec<Elem>> rows;
    for (auto& bkt : buckets) {
      for (auto& v : bkt) rows.push_back(std::move(v));
    }
    if (!sink(std::move(rows))) return;
  }
}

// Feeds generated rows into an echelon; stops early once the space is full.
template <class Field>
auto into(Echelon<Field>& ech) {
  return [&ech](std::vector<BasicSparseVec<typename Field::Elem>>&& rows) {
    ech.add_rows(std::move(rows));
    return ech.rank() < ech.ncols();
  };
}

void check_arity(unsigned n, unsigned cap) {
  if (n < 3) throw ArgumentError("ideal components start at arity 3");
  const unsigned limit = std::min(cap, kExperimentalArityCap);
  if (n > limit) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the arity cap " +
                        std::to_string(limit));
  }
}

}  // namespace

std::string to_string(Method m) { return m == Method::direct ? "direct" : "recursive"; }

Method parse_method(const std::string& s) {
  if (s == "direct") return Method::direct;
  if (s == "recursive") return Method::recursive;
  throw ArgumentError("unknown method '" + s + "' (expected direct or recursive)");
}

FieldStrategy FieldStrategy::parse(const std::string& s) {
  if (s == "auto") return automatic();
  if (s == "rational") return rationals();
  if (s.rfind("prime:", 0) == 0) {
    const std::string digits = s.substr(6);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ArgumentError("malformed prime in '" + s + "'");
    }
    const auto p = std::stoull(digits);
    const mpz_class z(static_cast<unsigned long>(p));
    if (p < 3 || p >= (1ull << 31) || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
      throw ArgumentError("'" + digits + "' is not a prime in [3, 2^31)");
    }
    return modp(static_cast<std::uint32_t>(p));
  }
  throw ArgumentError("unknown field '" + s + "' (expected rational, prime:P or auto)");
}

std::string FieldStrategy::name() const {
  switch (kind) {
    case Kind::rational:
      return "rational";
    case Kind::prime:
      return "prime:" + std::to_string(prime);
    case Kind::automatic:
      break;
  }
  return "auto";
}

std::vector<std::uint64_t> DimTable::dims() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.push_back(e.dim);
  return out;
}

template <class Field>
std::vector<BasicRrefBasis<typename Field::Elem>> ideal_chain(const idlang::RelationSpace& r,
                                                              unsigned max_arity, Method method,
                                                              const Field& field, Exec exec) {
  std::vector<BasicRrefBasis<typename Field::Elem>> chain;
  for (unsigned n = 3; n <= max_arity; ++n) {
    Echelon<Field> ech(field, treekit::monomial_count(n), exec);
    if (method == Method::direct || n == 3) {
      generate_direct(r, n, field, exec, into(ech));
    } else {
      generate_recursive(chain.back(), n, exec, into(ech));
    }
    chain.push_back(ech.basis());
  }
  return chain;
}

template std::vector<exactla::RrefBasis> ideal_chain<exactla::RationalField>(
    const idlang::RelationSpace&, unsigned, Method, const exactla::RationalField&, Exec);
template std::vector<exactla::ModRrefBasis> ideal_chain<exactla::PrimeField>(
    const idlang::RelationSpace&, unsigned, Method, const exactla::PrimeField&, Exec);

exactla::SparseMat consequences(const idlang::RelationSpace& r, unsigned n, Method method,
                                unsigned arity_cap, Exec exec) {
  check_arity(n, arity_cap);
  const exactla::RationalField field;
  exactla::SparseMat out;
  out.ncols = treekit::monomial_count(n);
  if (r.dim() == 0) return out;

  auto collect = [&out](std::vector<exactla::SparseVec>&& rows) {
    for (auto& v : rows) out.rows.push_back(std::move(v));
    return true;
  };
  if (method == Method::direct || n == 3) {
    generate_direct(r, n, field, exec, collect);
  } else {
    const auto chain = ideal_chain(r, n - 1, method, field, exec);
    generate_recursive(chain.back(), n, exec, collect);
  }
  return out;
}

std::uint64_t ideal_rank(const idlang::RelationSpace& r, unsigned n, Method method,
                         exactla::FieldSpec field, unsigned arity_cap, Exec exec) {
  check_arity(n, arity_cap);
  if (field.kind == exactla::FieldSpec::Kind::rational) {
    return ideal_chain(r, n, method, exactla::RationalField{}, exec).back().rank();
  }
  return ideal_chain(r, n, method, exactla::PrimeField(field.prime), exec).back().rank();
}

DimTable dims(const idlang::RelationSpace& r, unsigned max_arity, const Options& options,
              std::string operad_name) {
  if (max_arity == 0) throw ArgumentError("max arity must be positive");
  if (max_arity >= 3) check_arity(max_arity, options.arity_cap);

  DimTable table;
  table.operad = std::move(operad_name);
  table.entries.push_back({1, 1, options.method, "exact"});
  if (max_arity >= 2) table.entries.push_back({2, 2, options.method, "exact"});
  if (max_arity < 3) return table;

  auto emit = [&](unsigned n, std::uint64_t rank, const std::string& field) {
    table.entries.push_back({n, treekit::monomial_count(n) - rank, options.method, field});
  };

  const auto& fs = options.field;
  if (fs.kind == FieldStrategy::Kind::rational) {
    const auto chain = ideal_chain(r, max_arity, options.method, exactla::RationalField{},
                                   options.exec);
    for (unsigned n = 3; n <= max_arity; ++n) emit(n, chain[n - 3].rank(), "rational");
    return table;
  }
  if (fs.kind == FieldStrategy::Kind::prime) {
    const auto chain = ideal_chain(r, max_arity, options.method, exactla::PrimeField(fs.prime),
                                   options.exec);
    for (unsigned n = 3; n <= max_arity; ++n) emit(n, chain[n - 3].rank(), fs.name());
    return table;
  }

  const unsigned rational_top = std::min(max_arity, kRationalAutoLimit);
  const auto exact = ideal_chain(r, rational_top, options.method, exactla::RationalField{},
                                 options.exec);
  for (unsigned n = 3; n <= rational_top; ++n) emit(n, exact[n - 3].rank(), "rational");
  if (max_arity <= kRationalAutoLimit) return table;

  const auto chain_a = ideal_chain(r, max_arity, options.method,
                                   exactla::PrimeField(exactla::kPrimeA), options.exec);
  const auto chain_b = ideal_chain(r, max_arity, options.method,
                                   exactla::PrimeField(exactla::kPrimeB), options.exec);
  const std::string label =
      "primes:" + std::to_string(exactla::kPrimeA) + "," + std::to_string(exactla::kPrimeB);
  for (unsigned n = kRationalAutoLimit + 1; n <= max_arity; ++n) {
    const auto ra = chain_a[n - 3].rank();
    const auto rb = chain_b[n - 3].rank();
    if (ra != rb) {
      throw CrossCheckError("arity " + std::to_string(n) + ": rank " + std::to_string(ra) +
                            " mod " + std::to_string(exactla::kPrimeA) + " but " +
                            std::to_string(rb) + " mod " + std::to_string(exactla::kPrimeB));
    }
    emit(n, ra, label);
  }
  return table;
}

}  // namespace quadop::idealgen
