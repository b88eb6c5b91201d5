#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

using Word = LieAlgebra::Word;  // nondecreasing basis-index sequence

/// Element of U(g) in PBW normal form: sparse map from nondecreasing words
/// to coefficients. The word order is the basis order fixed by the algebra.
class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(AlgebraPtr g) : algebra_(std::move(g)) {}

  static PBWElement constant(AlgebraPtr g, const Rational& c);
  static PBWElement generator(AlgebraPtr g, uint32_t k);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree: longest word; -1 for zero.
  int64_t degree() const;

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement scaled(const Rational& c) const;
  /// Normal-form product; straightening is memoized per algebra.
  PBWElement operator*(const PBWElement& o) const;
  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  void add_term(const Word& w, const Rational& c);

  std::string str() const;

 private:
  AlgebraPtr algebra_;
  std::map<Word, Rational> terms_;
};

/// ab - ba in normal form.
PBWElement u_commutator(const PBWElement& a, const PBWElement& b);

/// Canonical symmetrisation S(g) -> U(g): a monomial goes to the average
/// of the distinct orderings of its letter multiset, with multiplicity
/// weights so the total weight is 1. The polynomial may not contain formal
/// variables.
PBWElement symmetrise(const AlgebraPtr& g, const CPoly& p);

/// Top-filtration image in S(g) (forget the ordering of each longest word).
CPoly symbol(const PBWElement& a);

struct CentreReport {
  std::vector<std::pair<std::size_t, uint32_t>> failures;  // (element, basis)
  bool ok() const { return failures.empty(); }
};

/// Verifies [xi, e] = 0 for every basis xi and every listed element.
CentreReport centre_check(const LieAlgebra& g,
                          const std::vector<PBWElement>& elems);

/// Normal form of an arbitrary word by naive rewriting; `first_descent`
/// selects which out-of-order pair is straightened first. Used to confirm
/// confluence of the reduction order; not memoized.
PBWElement straighten_reference(const AlgebraPtr& g, const Word& w,
                                bool first_descent);

}  // namespace shiftarg
