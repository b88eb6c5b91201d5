#include "shiftarg/poisson.hpp"

#include <sstream>
#include <stdexcept>

#include "shiftarg/random.hpp"

namespace shiftarg {

CPoly poisson_bracket(const LieAlgebra& g, const CPoly& a, const CPoly& b) {
  if (!same_context(a.context(), g.context()) ||
      !same_context(b.context(), g.context()))
    throw std::invalid_argument("poisson: context mismatch");
  const uint32_t r = static_cast<uint32_t>(g.dim());
  std::vector<CPoly> da(r), db(r);
  std::vector<bool> dha(r, false), dhb(r, false);
  const auto pa = [&](uint32_t i) -> const CPoly& {
    if (!dha[i]) da[i] = a.partial(i), dha[i] = true;
    return da[i];
  };
  const auto pb = [&](uint32_t j) -> const CPoly& {
    if (!dhb[j]) db[j] = b.partial(j), dhb[j] = true;
    return db[j];
  };
  CPoly out(g.context());
  for (uint32_t i = 0; i < r; ++i) {
    for (uint32_t j = i + 1; j < r; ++j) {
      const SparseVec br = g.bracket(i, j);
      if (br.empty()) continue;
      const CPoly t = pa(i) * pb(j) - pa(j) * pb(i);
      if (t.is_zero()) continue;
      CPoly lin(g.context());
      for (const auto& [k, c] : br) lin.add_term(Monomial::variable(k), c);
      out = out + t * lin;
    }
  }
  return out;
}

bool is_invariant(const LieAlgebra& g, const CPoly& p, const Subspace& sub) {
  for (const auto& row : sub.basis) {
    CPoly xi(g.context());
    for (uint32_t i = 0; i < g.dim(); ++i)
      xi.add_term(Monomial::variable(i), row[i]);
    if (!poisson_bracket(g, xi, p).is_zero()) return false;
  }
  return true;
}

bool is_invariant(const LieAlgebra& g, const CPoly& p) {
  Subspace whole{q_identity(g.dim())};
  return is_invariant(g, p, whole);
}

MFFamily mf_family(const AlgebraPtr& g, const std::vector<CPoly>& invariants,
                   const Functional& gamma) {
  MFFamily fam;
  fam.algebra = g;
  fam.gamma = gamma;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    const CPoly& h = invariants[i];
    if (!h.is_homogeneous())
      throw std::invalid_argument("mf_family: invariant not homogeneous");
    if (!is_invariant(*g, h))
      throw std::invalid_argument("mf_family: input is not an invariant");
    CPoly d = h;
    Rational kfact = 1;
    const int64_t deg = h.degree();
    for (unsigned k = 0; static_cast<int64_t>(k) < deg || k == 0; ++k) {
      if (k > 0) {
        d = d.directional_derivative(gamma.values);
        kfact *= static_cast<long>(k);
      }
      CPoly shift = d.scaled(1 / kfact);
      if (shift.is_zero())
        fam.dropped.emplace_back(i, k);
      else
        fam.generators.push_back({i, k, std::move(shift)});
    }
  }
  return fam;
}

std::pair<CPoly, unsigned> top_shift_component(const CPoly& h,
                                               const Functional& gamma) {
  if (h.is_zero())
    throw std::invalid_argument("top_shift_component: zero input");
  CPoly cur = h, next = h.directional_derivative(gamma.values);
  unsigned m = 0;
  Rational mfact = 1;
  while (!next.is_zero()) {
    cur = next;
    ++m;
    mfact *= static_cast<long>(m);
    next = next.directional_derivative(gamma.values);
  }
  return {cur.scaled(1 / mfact), m};
}

TopDegreeReport degrees_top(const AlgebraPtr& g,
                            const std::vector<CPoly>& invariants,
                            const Functional& gamma) {
  TopDegreeReport rep;
  for (const auto& h : invariants) {
    const auto [top, m] = top_shift_component(h, gamma);
    rep.degrees.push_back(top.degree());
    rep.total += top.degree();
  }
  const Subspace st = stabiliser(*g, gamma);
  // ind g_gamma equals rk g for reductive g; estimate on the restricted
  // algebra otherwise.
  const std::size_t ind =
      g->rank() >= 0 ? static_cast<std::size_t>(g->rank())
                     : index_estimate(*restrict_to(g, st), 24, 7);
  rep.b_q_gamma = b_of(st.dim(), ind);
  rep.good_system = Rational(rep.total) == rep.b_q_gamma;
  return rep;
}

QMatrix jacobian_at(const std::vector<CPoly>& polys, const QVector& point) {
  QMatrix jac;
  for (const auto& p : polys) {
    QVector row;
    const std::size_t nvars = p.context()->lie_count();
    row.reserve(nvars);
    for (uint32_t i = 0; i < nvars; ++i)
      row.push_back(p.partial(i).eval(point));
    jac.push_back(std::move(row));
  }
  return jac;
}

KostantReport kostant_pointwise_check(const LieAlgebra& g,
                                      const std::vector<CPoly>& invariants,
                                      std::size_t samples, uint64_t seed) {
  if (g.rank() >= 0 &&
      invariants.size() != static_cast<std::size_t>(g.rank()))
    throw std::invalid_argument(
        "kostant_check: need rank-many invariants");
  KostantReport rep;
  const std::size_t n = invariants.size();
  Sampler smp(seed);
  std::ostringstream detail;
  for (std::size_t t = 0; t < samples; ++t) {
    // Include the origin as the designed singular sample.
    QVector x = t == 0 ? QVector(g.dim(), Rational(0))
                       : smp.vector(g.dim() + 2);
    x.resize(g.dim() + 2, Rational(0));  // formal variables evaluate to zero
    const QMatrix jac = jacobian_at(invariants, x);
    const std::size_t jac_rank = rank(jac);
    const Functional fx{QVector(x.begin(), x.begin() + g.dim()), std::nullopt};
    const Subspace stab = stabiliser(g, fx);
    ++rep.samples;
    const bool regular = stab.dim() == n;
    if (regular) ++rep.regular_points;
    if ((jac_rank == n) != regular) {
      ++rep.failures;
      detail << "wedge/regularity mismatch at sample " << t << "; ";
      continue;
    }
    // d_x H_i always lies in ker of the skew form at x: check that each
    // Jacobian row is in the stabiliser row space.
    for (const auto& row : jac) {
      if (!in_row_space(stab.basis, row)) {
        ++rep.failures;
        detail << "differential escapes the stabiliser at sample " << t
               << "; ";
        break;
      }
    }
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace shiftarg
