#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

/// Lie-Poisson bracket on S(g): {a, b} = sum (da/dx_i)(db/dx_j) [xi_i, xi_j],
/// the bracket values re-expressed as degree-1 polynomials.
CPoly poisson_bracket(const LieAlgebra& g, const CPoly& a, const CPoly& b);

/// True iff {xi, p} = 0 for every basis row xi of `sub`.
bool is_invariant(const LieAlgebra& g, const CPoly& p, const Subspace& sub);
/// Invariance against the whole algebra.
bool is_invariant(const LieAlgebra& g, const CPoly& p);

/// Shift-of-argument family: all nonzero (1/k!) d_gamma^k H_i with
/// 0 <= k <= deg H_i - 1, ordered by (i, k). Vanishing shifts are dropped
/// and recorded.
struct MFFamily {
  AlgebraPtr algebra;
  Functional gamma;
  struct Entry {
    std::size_t invariant;  // index into the input list
    unsigned order;         // shift order k
    CPoly poly;             // (1/k!) d_gamma^k H_i
  };
  std::vector<Entry> generators;
  std::vector<std::pair<std::size_t, unsigned>> dropped;

  std::vector<CPoly> polys() const {
    std::vector<CPoly> out;
    out.reserve(generators.size());
    for (const auto& e : generators) out.push_back(e.poly);
    return out;
  }
};

/// Inputs must be homogeneous invariants (verified, not trusted).
MFFamily mf_family(const AlgebraPtr& g, const std::vector<CPoly>& invariants,
                   const Functional& gamma);

/// Top nonvanishing shift component: (^gamma H, m) with m the largest k
/// such that d_gamma^k H != 0 and ^gamma H = (1/m!) d_gamma^m H.
std::pair<CPoly, unsigned> top_shift_component(const CPoly& h,
                                               const Functional& gamma);

struct TopDegreeReport {
  std::vector<int64_t> degrees;  // deg ^gamma H_i
  int64_t total = 0;
  Rational b_q_gamma;     // b(g_gamma)
  bool good_system = false;  // total == b(g_gamma)
};

TopDegreeReport degrees_top(const AlgebraPtr& g,
                            const std::vector<CPoly>& invariants,
                            const Functional& gamma);

/// Pointwise consequence of the Kostant identity: at each sampled point x,
/// the differentials d_x H_i are independent exactly when x is regular, and
/// they always lie in the kernel of the skew form at x.
struct KostantReport {
  std::size_t samples = 0;
  std::size_t regular_points = 0;
  std::size_t failures = 0;
  std::string detail;
  bool ok() const { return failures == 0; }
};

KostantReport kostant_pointwise_check(const LieAlgebra& g,
                                      const std::vector<CPoly>& invariants,
                                      std::size_t samples, uint64_t seed);

/// Jacobian matrix of the family at a point (rows = polynomials).
QMatrix jacobian_at(const std::vector<CPoly>& polys, const QVector& point);

}  // namespace shiftarg
