#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shiftarg/context.hpp"
#include "shiftarg/rational.hpp"

namespace shiftarg {

/// Sparse exponent vector: (variable index, exponent) pairs sorted by
/// index, exponents strictly positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<uint32_t, uint32_t>> exps);

  static Monomial variable(uint32_t index, uint32_t power = 1);

  const std::vector<std::pair<uint32_t, uint32_t>>& exps() const {
    return exps_;
  }
  uint32_t exponent(uint32_t index) const;
  uint64_t degree() const;
  bool is_constant() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  /// Divides out var^power; degree of var must be at least power.
  Monomial without(uint32_t index, uint32_t power) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Graded lexicographic order (x_0 > x_1 > ...), total degree first.
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<uint32_t, uint32_t>> exps_;
};

/// Sparse multivariate polynomial over Rational in canonical form: no zero
/// coefficients, terms ordered graded-lexicographically. Equality of the
/// term maps is equality of polynomials. Immutable in spirit: all
/// operations return new values.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  CPoly(ContextPtr ctx, const Rational& constant);

  static CPoly variable(ContextPtr ctx, uint32_t index);
  static CPoly monomial(ContextPtr ctx, Monomial m, const Rational& coeff);

  const ContextPtr& context() const { return ctx_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int64_t degree() const;
  bool is_homogeneous() const;
  /// True if no formal (non-Lie) variable occurs.
  bool lie_only() const;
  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant_term() const;

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator-() const;
  CPoly operator*(const CPoly& o) const;
  CPoly scaled(const Rational& c) const;
  bool operator==(const CPoly& o) const;
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  void add_term(const Monomial& m, const Rational& c);

  /// Formal partial derivative with respect to one variable.
  CPoly partial(uint32_t index) const;

  /// Exact evaluation; every variable occurring in the polynomial must be
  /// assigned.
  Rational eval(const std::map<uint32_t, Rational>& point) const;
  Rational eval(const std::vector<Rational>& point) const;

  /// Substitutes a polynomial for each variable listed in `subs`;
  /// unlisted variables stay themselves.
  CPoly substitute(const std::map<uint32_t, CPoly>& subs) const;

  /// Directional derivative along gamma, indexed by the Lie block of the
  /// context. Formal variables are skipped.
  CPoly directional_derivative(const std::vector<Rational>& gamma) const;

  /// Coefficient of var^power, with the variable removed from the terms.
  CPoly extract_coeff(uint32_t index, uint32_t power) const;
  /// Largest power of the given variable occurring in the polynomial.
  uint32_t max_power(uint32_t index) const;

  std::string str() const;

 private:
  ContextPtr ctx_;
  std::map<Monomial, Rational> terms_;
};

/// Expansion of a homogeneous p along gamma: returns [H_0, ..., H_m] with
/// H_k = (1/k!) d_gamma^k p, so that p(x + t*gamma) = sum t^k H_k(x).
std::vector<CPoly> shift_expand(const CPoly& p,
                                const std::vector<Rational>& gamma);

/// Rewrites p in `target`, replacing the i-th variable of p's context by
/// images[i]. All images must live in the target context.
CPoly substitute_cross(const CPoly& p, const ContextPtr& target,
                       const std::vector<CPoly>& images);

}  // namespace shiftarg
