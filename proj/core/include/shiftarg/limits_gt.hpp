#pragma once

#include <string>
#include <vector>

#include "shiftarg/formal_poly.hpp"
#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/pbw.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

using UPoly = FormalPoly<CPoly>;
using UPolyNC = FormalPoly<PBWElement>;

/// Splits a polynomial containing the formal variable u into u-power layers.
UPoly collect_u(const CPoly& p);

/// (coefficient of the minimal present u-power, that power).
std::pair<CPoly, int> lowest_u_component(const UPoly& f);
std::pair<PBWElement, int> lowest_u_component(const UPolyNC& f);

/// k-th directional derivative along gamma + u*mu, as a polynomial whose
/// terms carry powers of the formal variable u.
CPoly shifted_derivative(const LieAlgebra& g, const CPoly& h,
                         const Functional& gamma, const Functional& mu,
                         unsigned k);

struct VinbergFamily {
  AlgebraPtr algebra;
  struct Entry {
    std::size_t invariant;
    unsigned order;       // k of d^k_{gamma+u mu}
    CPoly poly;           // lowest u-component
    int u_power;
    bool from_centraliser_shift;  // true on the k > deg H - deg ^g H side
  };
  std::vector<Entry> entries;
  std::vector<CPoly> polys() const {
    std::vector<CPoly> out;
    for (const auto& e : entries) out.push_back(e.poly);
    return out;
  }
};

/// Lowest u-components of d^k_{gamma+u mu} H_i for the standard invariants,
/// 0 <= k < deg H_i. Each component is verified against the case-split
/// prediction: the plain gamma-shift while d_gamma^k H_i survives, and the
/// restricted mu-shift of the top component afterwards (computed both
/// directly in S(g) and through the centraliser coordinates). gamma must be
/// nilpotent, mu regular with a regular restriction to the centraliser.
VinbergFamily vinberg_limit_family(const AlgebraPtr& g, const Functional& gamma,
                                   const Functional& mu);

/// Symmetrised images of the limit family.
std::vector<PBWElement> quantised_limit_family(const AlgebraPtr& g,
                                               const Functional& gamma,
                                               const Functional& mu);

struct GTFamily {
  AlgebraPtr algebra;
  std::vector<PBWElement> generators;
  std::vector<std::string> names;
};

/// Gelfand-Tsetlin subalgebra of U(gl_N): the symmetrised invariants of
/// the chain gl_N > gl_{N-1} > ... > gl_1 together with the Cartan
/// elements.
GTFamily gt_gl(std::size_t N);

/// Symplectic analogue for U(sp_2n): the centres of the chain members
/// sp_2n > sp_{2n-2} > ... > sp_2 (anchored at the inner index blocks),
/// their first-order Cartan shifts, and the Cartan elements F_11..F_nn.
GTFamily gt_sp(std::size_t n);

}  // namespace shiftarg
