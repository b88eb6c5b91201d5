#include "shiftarg/limits_gt.hpp"

#include <stdexcept>

#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/poisson.hpp"

namespace shiftarg {

namespace {

uint32_t u_index(const CPoly& p) {
  return static_cast<uint32_t>(p.context()->lie_count());  // "u" slot
}

// Proportionality over Q: b == c * a for some nonzero rational c.
bool proportional(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  const auto& [m0, c0] = *a.terms().begin();
  const Rational ratio = b.coefficient(m0) / c0;
  if (is_zero(ratio)) return false;
  return b == a.scaled(ratio);
}

}  // namespace

UPoly collect_u(const CPoly& p) {
  UPoly out;
  const uint32_t u = u_index(p);
  for (uint32_t pw = 0; pw <= p.max_power(u); ++pw)
    out.add(static_cast<int>(pw), p.extract_coeff(u, pw));
  return out;
}

std::pair<CPoly, int> lowest_u_component(const UPoly& f) {
  return f.lowest();
}

std::pair<PBWElement, int> lowest_u_component(const UPolyNC& f) {
  return f.lowest();
}

CPoly shifted_derivative(const LieAlgebra& g, const CPoly& h,
                         const Functional& gamma, const Functional& mu,
                         unsigned k) {
  const CPoly u = CPoly::variable(g.context(), u_index(h));
  CPoly d = h;
  for (unsigned t = 0; t < k; ++t)
    d = d.directional_derivative(gamma.values) +
        u * d.directional_derivative(mu.values);
  return d;
}

VinbergFamily vinberg_limit_family(const AlgebraPtr& g, const Functional& gamma,
                                   const Functional& mu) {
  if (!is_nilpotent(*g, gamma))
    throw std::invalid_argument("vinberg_limit: gamma must be nilpotent");
  if (g->rank() < 0)
    throw std::invalid_argument("vinberg_limit: reductive algebra required");
  const std::size_t n = static_cast<std::size_t>(g->rank());
  if (stabiliser(*g, mu).dim() != n)
    throw std::invalid_argument("vinberg_limit: mu is not regular");
  const Subspace stab = stabiliser(*g, gamma);
  const AlgebraPtr q = restrict_to(g, stab);
  const Functional mu_bar{restrict_values(mu, stab), std::nullopt};
  if (stabiliser(*q, mu_bar).dim() != n)
    throw std::invalid_argument(
        "vinberg_limit: restriction of mu to the centraliser is not regular");

  VinbergFamily fam;
  fam.algebra = g;
  const std::vector<CPoly> invariants = standard_invariants(*g);
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    const CPoly& h = invariants[i];
    const auto [top, top_order] = top_shift_component(h, gamma);
    const int64_t drop = h.degree() - top.degree();  // deg H - deg ^g H
    // Top component in centraliser coordinates for the second route.
    const auto top_q = to_subalgebra_coords(*g, q, top);
    if (!top_q)
      throw std::logic_error("vinberg_limit: top component outside S(q)");
    for (unsigned k = 0; static_cast<int64_t>(k) < h.degree(); ++k) {
      const CPoly expanded = shifted_derivative(*g, h, gamma, mu, k);
      const auto [low, power] = lowest_u_component(collect_u(expanded));
      CPoly expect(g->context());
      int expect_power = 0;
      bool from_shift = false;
      if (static_cast<int64_t>(k) <= drop) {
        CPoly d = h;
        for (unsigned t = 0; t < k; ++t)
          d = d.directional_derivative(gamma.values);
        expect = std::move(d);
      } else {
        from_shift = true;
        const unsigned kbar = k - static_cast<unsigned>(drop);
        expect_power = static_cast<int>(kbar);
        CPoly d = top;
        for (unsigned t = 0; t < kbar; ++t)
          d = d.directional_derivative(mu.values);
        expect = std::move(d);
        // Same value through the centraliser: shift ^g H by the restricted
        // functional inside S(q), then lift back.
        CPoly dq = *top_q;
        for (unsigned t = 0; t < kbar; ++t)
          dq = dq.directional_derivative(mu_bar.values);
        if (!proportional(from_subalgebra_coords(*g, *q, dq), expect))
          throw std::logic_error(
              "vinberg_limit: centraliser route disagrees with direct route");
      }
      if (power != expect_power || !proportional(low, expect))
        throw std::logic_error(
            "vinberg_limit: lowest component does not match the prediction");
      fam.entries.push_back({i, k, low, power, from_shift});
    }
  }
  return fam;
}

std::vector<PBWElement> quantised_limit_family(const AlgebraPtr& g,
                                               const Functional& gamma,
                                               const Functional& mu) {
  const VinbergFamily fam = vinberg_limit_family(g, gamma, mu);
  std::vector<PBWElement> out;
  out.reserve(fam.entries.size());
  for (const auto& e : fam.entries) out.push_back(symmetrise(g, e.poly));
  return out;
}

GTFamily gt_gl(std::size_t N) {
  if (N < 2) throw std::invalid_argument("gt_gl: N >= 2 required");
  GTFamily gt;
  gt.algebra = build_gl(N);
  const auto& g = gt.algebra;
  for (std::size_t i = 1; i <= N; ++i) {
    const auto e = span_entry(*g, i, i);
    gt.generators.push_back(PBWElement::generator(g, e->first));
    gt.names.push_back("E[" + std::to_string(i) + "," + std::to_string(i) + "]");
  }
  const auto mat = generator_matrix(g);
  const PBWElement zero(g), one = PBWElement::constant(g, Rational(1));
  for (std::size_t k = N; k >= 1; --k) {
    AlgMatrix<PBWElement> sub(k, std::vector<PBWElement>(k, zero));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = mat[a][b];
    for (std::size_t m = 1; m <= k; ++m) {
      gt.generators.push_back(det_sym(sub, m, zero, one));
      gt.names.push_back("Phi_gl" + std::to_string(k) + "[" +
                         std::to_string(m) + "]");
    }
  }
  return gt;
}

GTFamily gt_sp(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gt_sp: n >= 1 required");
  GTFamily gt;
  gt.algebra = build_classical(ClassicalType::C, n);
  const auto& g = gt.algebra;
  const std::size_t N = 2 * n;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto e = span_entry(*g, i, i);
    gt.generators.push_back(PBWElement::generator(g, e->first));
    gt.names.push_back("F[" + std::to_string(i) + "," + std::to_string(i) + "]");
  }
  const auto cmat = coordinate_matrix(*g);
  const CPoly czero(g->context()), cone(g->context(), Rational(1));
  for (std::size_t m = 0; m < n; ++m) {
    // Chain member sp_{2n-2m} on the index block m+1 .. (m+1)'.
    const std::size_t size = N - 2 * m;
    AlgMatrix<CPoly> sub(size, std::vector<CPoly>(size, czero));
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) sub[a][b] = cmat[m + a][m + b];
    // Shift direction: the functional paired with F_{m+1,m+1} through the
    // trace form, normalised so that it takes value 1 on F_{m+1,m+1}.
    QMatrix hm = g->element_matrix([&] {
      QVector coords(g->dim(), Rational(0));
      coords[span_entry(*g, m + 1, m + 1)->first] = 1;
      return coords;
    }());
    const Functional nu = functional_from_matrix(*g, q_scale(hm, Rational(1, 2)));
    for (std::size_t i = 1; 2 * i <= size; ++i) {
      const CPoly phi = det_sym(sub, 2 * i, czero, cone);
      gt.generators.push_back(symmetrise(g, phi));
      gt.names.push_back("Phi_sp" + std::to_string(size) + "[" +
                         std::to_string(2 * i) + "]");
      const CPoly shifted = phi.directional_derivative(nu.values);
      if (!shifted.is_zero()) {
        gt.generators.push_back(symmetrise(g, shifted));
        gt.names.push_back("dPhi_sp" + std::to_string(size) + "[" +
                           std::to_string(2 * i) + "]");
      }
    }
  }
  return gt;
}

}  // namespace shiftarg
