#include "quadop/lieadm.hpp"

#include "quadop/presets.hpp"
#include "quadop/treekit.hpp"

namespace quadop::lieadm {

namespace {

using treekit::TreeMonomial;

std::vector<Rational> free_coordinates(const LinComb& v, const exactla::RrefBasis& relations) {
  const auto residual = exactla::member(v.coords, relations).residual;
  std::vector<Rational> out;
  for (auto c : relations.free_columns()) out.push_back(residual.at(c));
  return out;
}

LinComb unit(std::uint32_t index) {
  return LinComb::monomial(TreeMonomial::from_index(idlang::kRelationArity, index));
}

// An element of A (x) U as a list of signed pure tensors of planar trees.
struct PureTensor {
  TreeMonomial a;
  TreeMonomial u;
  int sign;
};
using TensorSum = std::vector<PureTensor>;

TensorSum bracket(const TensorSum& x, const TensorSum& y) {
  // All x*y terms first, then all y*x terms.
  TensorSum out;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& s : x) {
      for (const auto& t : y) {
        const int sign = s.sign * t.sign;
        if (pass == 0) {
          out.push_back({TreeMonomial::join(s.a, t.a), TreeMonomial::join(s.u, t.u), sign});
        } else {
          out.push_back({TreeMonomial::join(t.a, s.a), TreeMonomial::join(t.u, s.u), -sign});
        }
      }
    }
  }
  return out;
}

}  // namespace

QuotientBasis::QuotientBasis(const idlang::RelationSpace& r)
    : relations_(r.basis()), reps_(r.basis().free_columns()) {}

QuotientBasis::QuotientBasis(const idlang::RelationSpace& r,
                             std::vector<std::uint32_t> representatives)
    : relations_(r.basis()), reps_(std::move(representatives)) {
  const std::size_t q = idlang::kRelationDim - r.dim();
  if (reps_.size() != q) {
    throw ArgumentError("need " + std::to_string(q) + " representatives, got " +
                        std::to_string(reps_.size()));
  }
  exactla::DenseMat a;
  for (auto s : reps_) {
    if (s >= idlang::kRelationDim) throw ArgumentError("representative index out of range");
    a.push_back(free_coordinates(unit(s), relations_));
  }
  change_ = exactla::inverse(a);
  if (!change_) throw ArgumentError("representatives do not span a complement of the relations");
}

std::vector<Rational> QuotientBasis::coordinates(const LinComb& v) const {
  auto base = free_coordinates(v, relations_);
  if (!change_) return base;
  const auto& inv = *change_;
  std::vector<Rational> out(reps_.size(), Rational(0));
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (sgn(base[i]) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += base[i] * inv[i][j];
  }
  return out;
}

LinComb QuotientBasis::normal_form(const LinComb& v) const {
  const auto coords = coordinates(v);
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  for (std::size_t j = 0; j < coords.size(); ++j) terms.emplace_back(reps_[j], coords[j]);
  return LinComb::from_vec(
      idlang::kRelationArity,
      exactla::make_vec(exactla::RationalField{}, idlang::kRelationDim, std::move(terms)));
}

LinComb normal_form(const LinComb& v, const idlang::RelationSpace& r) {
  return QuotientBasis(r).normal_form(v);
}

std::vector<JacobiatorTerm> jacobiator() {
  auto generator = [](unsigned label) {
    return TensorSum{{TreeMonomial::leaf(label), TreeMonomial::leaf(label), 1}};
  };
  const TensorSum a = generator(1);
  const TensorSum b = generator(2);
  const TensorSum c = generator(3);
  std::vector<JacobiatorTerm> out;
  for (const auto& cyc : {bracket(bracket(a, b), c), bracket(bracket(b, c), a),
                          bracket(bracket(c, a), b)}) {
    for (const auto& t : cyc) {
      out.push_back({static_cast<std::uint32_t>(t.a.index()), t.sign,
                     static_cast<std::uint32_t>(t.u.index())});
    }
  }
  return out;
}

std::vector<LinComb> collected_conditions(const QuotientBasis& q) {
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> terms(q.size());
  for (const auto& t : jacobiator()) {
    const auto coords = q.coordinates(unit(t.a_index));
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (sgn(coords[j]) != 0) terms[j].emplace_back(t.u_index, coords[j] * t.sign);
    }
  }
  std::vector<LinComb> out;
  for (auto& t : terms) {
    out.push_back(LinComb::from_vec(
        idlang::kRelationArity,
        exactla::make_vec(exactla::RationalField{}, idlang::kRelationDim, std::move(t))));
  }
  return out;
}

idlang::RelationSpace jacobiator_conditions(const idlang::RelationSpace& r) {
  return idlang::RelationSpace::s3_closure(collected_conditions(QuotientBasis(r)),
                                           {"Lie-admissibility conditions"});
}

bool ConditionsReport::all_pass() const {
  if (!span_matches) return false;
  for (const auto& f : fixtures) {
    if (!f.in_span) return false;
  }
  return true;
}

ConditionsReport check_novikov_conditions(const idlang::RelationSpace& r) {
  const auto left = presets::relation_space(presets::preset("novikov-left"));
  ConditionsReport report;
  for (const char* text : kNovikovConditions) {
    report.fixtures.push_back({text, left.contains(idlang::parse_identity(text))});
  }
  report.span_matches = jacobiator_conditions(r) == left;
  return report;
}

std::vector<FixtureResult> check_rewrites(const idlang::RelationSpace& r) {
  std::vector<FixtureResult> out;
  for (const char* text : kNovikovRewrites) {
    out.push_back({text, r.contains(idlang::parse_identity(text))});
  }
  return out;
}

}  // namespace quadop::lieadm
