#pragma once

#include <vector>

#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/poly.hpp"

// Independent reference implementations used to cross-check the
// symmetrised operators over commutative entries. Deliberately naive:
// Laplace expansions and series inversion, no shared code with the
// algorithms they audit.
namespace shiftarg::oracle {

inline CPoly classical_det(const AlgMatrix<CPoly>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("classical_det: empty matrix");
  if (n == 1) return m[0][0];
  CPoly out(m[0][0].context());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    AlgMatrix<CPoly> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const CPoly cof = m[0][j] * classical_det(minor);
    out = j % 2 == 0 ? out + cof : out - cof;
  }
  return out;
}

inline CPoly classical_permanent(const AlgMatrix<CPoly>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  CPoly out(m[0][0].context());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    AlgMatrix<CPoly> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    out = out + m[0][j] * classical_permanent(minor);
  }
  return out;
}

/// Sum of the principal k x k minors.
inline CPoly classical_minor_sum(const AlgMatrix<CPoly>& m, std::size_t k) {
  const std::size_t n = m.size();
  const CPoly zero(m[0][0].context());
  CPoly out = zero;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    AlgMatrix<CPoly> sub(k, std::vector<CPoly>(k, zero));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[idx[a]][idx[b]];
    out = out + classical_det(sub);
    std::size_t i = k;
    bool moved = false;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        moved = true;
        break;
      }
    }
    if (!moved) return out;
  }
}

/// Same for permanents of multiset-repeated principal submatrices with the
/// 1/(alpha!) weights: the coefficient of q^k in det(1 - qM)^{-1}.
inline CPoly classical_permanent_sum(const AlgMatrix<CPoly>& m,
                                     std::size_t k) {
  const std::size_t n = m.size();
  const CPoly zero(m[0][0].context());
  CPoly out = zero;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    AlgMatrix<CPoly> sub(k, std::vector<CPoly>(k, zero));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[idx[a]][idx[b]];
    Rational weight = 1;
    for (std::size_t i = 0, run = 1; i < k; ++i, ++run) {
      if (i + 1 < k && idx[i + 1] == idx[i]) continue;
      weight /= factorial(static_cast<unsigned>(run));
      run = 0;
    }
    out = out + classical_permanent(sub).scaled(weight);
    std::size_t i = k;
    bool moved = false;
    while (i-- > 0) {
      if (idx[i] + 1 < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[i];
        moved = true;
        break;
      }
    }
    if (!moved) return out;
  }
}

/// Coefficient of q^k in det(1 - qM)^{-1} via the characteristic
/// polynomial and power-series inversion; q rides on the formal variable u.
inline CPoly inverse_charpoly_coeff(const LieAlgebra& g,
                                    const AlgMatrix<CPoly>& m, std::size_t k) {
  const auto ctx = g.context();
  const uint32_t u = static_cast<uint32_t>(ctx->lie_count());
  const CPoly uvar = CPoly::variable(ctx, u);
  const std::size_t n = m.size();
  AlgMatrix<CPoly> a(n, std::vector<CPoly>(n, CPoly(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = CPoly(ctx) - uvar * m[i][j];
      if (i == j) a[i][j] = a[i][j] + CPoly(ctx, Rational(1));
    }
  const CPoly charpoly = classical_det(a);
  std::vector<CPoly> c;  // det(1-qM) coefficients
  for (std::size_t j = 0; j <= k; ++j)
    c.push_back(charpoly.extract_coeff(u, static_cast<uint32_t>(j)));
  std::vector<CPoly> b{CPoly(ctx, Rational(1))};  // series inverse
  for (std::size_t j = 1; j <= k; ++j) {
    CPoly acc(ctx);
    for (std::size_t t = 1; t <= j; ++t) acc = acc + c[t] * b[j - t];
    b.push_back(CPoly(ctx) - acc);
  }
  return b[k];
}

/// Pfaffian of a skew-symmetric matrix by first-row expansion.
inline CPoly classical_pfaffian(const AlgMatrix<CPoly>& skew) {
  const std::size_t n = skew.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n == 0) throw std::invalid_argument("pfaffian: empty matrix");
  if (n == 2) return skew[0][1];
  CPoly out(skew[0][0].context());
  for (std::size_t j = 1; j < n; ++j) {
    if (skew[0][j].is_zero()) continue;
    AlgMatrix<CPoly> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == 0 || r == j) continue;
      std::vector<CPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != 0 && c != j) row.push_back(skew[r][c]);
      minor.push_back(std::move(row));
    }
    const CPoly term = skew[0][j] * classical_pfaffian(minor);
    out = j % 2 == 1 ? out + term : out - term;
  }
  return out;
}

}  // namespace shiftarg::oracle
