#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shiftarg/formal_poly.hpp"
#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/pbw.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

/// Square matrix over an associative algebra; entries need +, *,
/// scaled(Rational), is_zero().
template <typename E>
using AlgMatrix = std::vector<std::vector<E>>;

namespace detail {

// Sum over assignments tau of the remaining positions to unused columns,
// sharing partial products along the prefix tree. `rows` is the ordered
// row sequence of the current sigma; `sign_sensitive` threads sgn(tau).
template <typename E>
void tau_recursion(const AlgMatrix<E>& sub,
                   const std::vector<std::size_t>& rows, std::size_t t,
                   std::vector<bool>& used, const E& partial, int sign,
                   bool sign_sensitive, E& total) {
  const std::size_t m = rows.size();
  if (t == m) {
    total = total + (sign < 0 ? partial.scaled(Rational(-1)) : partial);
    return;
  }
  int skipped_smaller = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (used[c]) {
      ++skipped_smaller;
      continue;
    }
    const E& entry = sub[rows[t]][c];
    if (!entry.is_zero()) {
      E next = partial * entry;
      if (!next.is_zero()) {
        const int parity =
            sign_sensitive && ((c - skipped_smaller) % 2 != 0) ? -sign : sign;
        used[c] = true;
        tau_recursion(sub, rows, t + 1, used, next, parity, sign_sensitive,
                      total);
        used[c] = false;
      }
    }
  }
}

template <typename E>
E double_sum(const AlgMatrix<E>& sub, const E& zero, const E& one,
             bool signs) {
  const std::size_t m = sub.size();
  std::vector<std::size_t> sigma(m);
  for (std::size_t i = 0; i < m; ++i) sigma[i] = i;
  E total = zero;
  do {
    int sgn_sigma = 1;
    if (signs)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (sigma[i] > sigma[j]) sgn_sigma = -sgn_sigma;
    std::vector<bool> used(m, false);
    tau_recursion(sub, sigma, 0, used, one, sgn_sigma, signs, total);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace detail

/// m-th symmetrised minor:
///   Det_m(M) = (1/m!) sum_{a_1<...<a_m} sum_{sigma,tau} sgn(sigma tau)
///              M_{a_sigma(1) a_tau(1)} ... M_{a_sigma(m) a_tau(m)}.
/// Entries need not commute; over a commutative ring this collapses to the
/// sum of principal m x m minors.
template <typename E>
E det_sym(const AlgMatrix<E>& mat, std::size_t m, const E& zero,
          const E& one) {
  const std::size_t n = mat.size();
  if (m < 1 || m > n) throw std::invalid_argument("det_sym: m out of range");
  std::vector<std::size_t> subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = i;
  E total = zero;
  while (true) {
    AlgMatrix<E> sub(m, std::vector<E>(m, zero));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub[i][j] = mat[subset[i]][subset[j]];
    total = total + detail::double_sum(sub, zero, one, true);
    // next subset in lexicographic order
    std::size_t i = m;
    while (i-- > 0) {
      if (subset[i] + (m - i) < n) {
        ++subset[i];
        for (std::size_t j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
        break;
      }
      if (i == 0) return total.scaled(1 / factorial(static_cast<unsigned>(m)));
    }
  }
}

/// m-th symmetrised permanent: the same double sum without signs, over
/// multisets a_1 <= ... <= a_m with weight 1/(alpha_1! ... alpha_N!).
template <typename E>
E per_sym(const AlgMatrix<E>& mat, std::size_t m, const E& zero,
          const E& one) {
  if (m < 1) throw std::invalid_argument("per_sym: m out of range");
  const std::size_t n = mat.size();
  std::vector<std::size_t> multiset(m, 0);
  E total = zero;
  while (true) {
    AlgMatrix<E> sub(m, std::vector<E>(m, zero));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        sub[i][j] = mat[multiset[i]][multiset[j]];
    Rational weight = 1;
    for (std::size_t i = 0, run = 1; i < m; ++i, ++run) {
      if (i + 1 < m && multiset[i + 1] == multiset[i]) continue;
      weight /= factorial(static_cast<unsigned>(run));
      run = 0;
    }
    total = total + detail::double_sum(sub, zero, one, false).scaled(weight);
    std::size_t i = m;
    bool advanced = false;
    while (i-- > 0) {
      if (multiset[i] + 1 < n) {
        ++multiset[i];
        for (std::size_t j = i + 1; j < m; ++j) multiset[j] = multiset[i];
        advanced = true;
        break;
      }
    }
    if (!advanced) return total.scaled(1 / factorial(static_cast<unsigned>(m)));
  }
}

/// Symmetrised Pfaffian of a matrix over o_2n coordinates, using the
/// primed-column convention: the k-th factor of each term is the
/// (sigma(2k-1), sigma(2k)') entry. The full (2n)! sum is taken literally;
/// noncommuting entries do not collapse to matchings. Hard limit n <= 3.
template <typename E>
E pfaffian_sym(const AlgMatrix<E>& mat, const E& zero, const E& one) {
  const std::size_t n2 = mat.size();
  if (n2 % 2 != 0) throw std::invalid_argument("pfaffian: odd matrix size");
  const std::size_t n = n2 / 2;
  if (n > 3)
    throw std::invalid_argument("pfaffian: n > 3 not supported (full (2n)! sum)");
  std::vector<std::size_t> perm(n2);
  for (std::size_t i = 0; i < n2; ++i) perm[i] = i;
  E total = zero;
  do {
    int sgn = 1;
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = i + 1; j < n2; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    E prod = one;
    bool dead = false;
    for (std::size_t k = 0; k < n && !dead; ++k) {
      const std::size_t row = perm[2 * k];
      const std::size_t col = n2 - 1 - perm[2 * k + 1];  // primed index
      if (mat[row][col].is_zero()) {
        dead = true;
        break;
      }
      prod = prod * mat[row][col];
      dead = prod.is_zero();
    }
    if (!dead) total = total + (sgn < 0 ? prod.scaled(Rational(-1)) : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational norm(1);
  for (std::size_t k = 0; k < n; ++k) norm *= 2;
  norm *= factorial(static_cast<unsigned>(n));
  return total.scaled(1 / norm);
}

// -- Concrete matrices over S(g) and U(g) ---------------------------------

/// The defining matrix E (type GL) or F (types O/SP) with entries regarded
/// as degree-1 polynomials in S(g).
AlgMatrix<CPoly> coordinate_matrix(const LieAlgebra& g);
/// Same matrix with entries in U(g).
AlgMatrix<PBWElement> generator_matrix(const AlgebraPtr& g);
/// mu + E z^-1 over S(g) with z^-1 the formal context variable "zinv".
AlgMatrix<CPoly> shifted_coordinate_matrix(const LieAlgebra& g,
                                           const Functional& mu);
/// mu + E z^-1 over U(g)[z^-1].
AlgMatrix<FormalPoly<PBWElement>> shifted_generator_matrix(
    const AlgebraPtr& g, const Functional& mu);

// -- Characteristic-polynomial invariants ----------------------------------

/// Phi_m = Det_m of the defining matrix. GL: m = 1..N; SP: m = 2,4,..,2n.
std::vector<CPoly> phi_invariants(const LieAlgebra& g);
/// Psi_m = Per_m of the defining matrix. GL: m = 1..N; O: m = 2,4,..,2n
/// (type B) or 2,4,..,2n-2 (type D).
std::vector<CPoly> psi_invariants(const LieAlgebra& g);
/// Pf F for o_2n.
CPoly pfaffian_invariant(const LieAlgebra& g);
/// Free generators of S(g)^g: Phi family for GL/SP, Psi family for o_2n+1,
/// Psi family plus the Pfaffian for o_2n. Always rank-many elements.
std::vector<CPoly> standard_invariants(const LieAlgebra& g);

// -- mu-shift polynomials in z^-1 ------------------------------------------

/// Coefficients [c_0, ..., c_m] of Det_m(mu + E z^-1), c_k at z^{-m+k}.
/// Commutatively c_k = (1/k!) d_mu^k Phi_m.
std::vector<CPoly> shift_poly_det(const LieAlgebra& g, const Functional& mu,
                                  std::size_t m);
std::vector<PBWElement> shift_poly_det_pbw(const AlgebraPtr& g,
                                           const Functional& mu,
                                           std::size_t m);
/// Per analogue.
std::vector<CPoly> shift_poly_per(const LieAlgebra& g, const Functional& mu,
                                  std::size_t m);
std::vector<PBWElement> shift_poly_per_pbw(const AlgebraPtr& g,
                                           const Functional& mu,
                                           std::size_t m);
/// Pfaffian analogue for o_2n: coefficients [pi_0, ..., pi_n].
std::vector<CPoly> shift_poly_pf(const LieAlgebra& g, const Functional& mu);
std::vector<PBWElement> shift_poly_pf_pbw(const AlgebraPtr& g,
                                          const Functional& mu);

}  // namespace shiftarg
