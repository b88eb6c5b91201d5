#include "shiftarg/matrix_invariants.hpp"

namespace shiftarg {

namespace {

void require_family(const LieAlgebra& g, std::initializer_list<AlgebraFamily> fams,
                    const char* what) {
  for (auto f : fams)
    if (g.family() == f) return;
  throw std::invalid_argument(std::string(what) + ": unsupported family");
}

uint32_t zinv_index(const LieAlgebra& g) {
  return static_cast<uint32_t>(g.dim() + 1);  // labels..., "u", "zinv"
}

}  // namespace

AlgMatrix<CPoly> coordinate_matrix(const LieAlgebra& g) {
  const std::size_t N = g.matrix_size();
  AlgMatrix<CPoly> m(N, std::vector<CPoly>(N, CPoly(g.context())));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (const auto e = span_entry(g, i, j))
        m[i - 1][j - 1].add_term(Monomial::variable(e->first), e->second);
  return m;
}

AlgMatrix<PBWElement> generator_matrix(const AlgebraPtr& g) {
  const std::size_t N = g->matrix_size();
  AlgMatrix<PBWElement> m(N, std::vector<PBWElement>(N, PBWElement(g)));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (const auto e = span_entry(*g, i, j))
        m[i - 1][j - 1] =
            PBWElement::generator(g, e->first).scaled(e->second);
  return m;
}

AlgMatrix<CPoly> shifted_coordinate_matrix(const LieAlgebra& g,
                                           const Functional& mu) {
  AlgMatrix<CPoly> m = coordinate_matrix(g);
  const QMatrix muM = mu_matrix(g, mu);
  const CPoly z = CPoly::variable(g.context(), zinv_index(g));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      m[i][j] = m[i][j] * z + CPoly(g.context(), muM[i][j]);
  return m;
}

AlgMatrix<FormalPoly<PBWElement>> shifted_generator_matrix(
    const AlgebraPtr& g, const Functional& mu) {
  const std::size_t N = g->matrix_size();
  const QMatrix muM = mu_matrix(*g, mu);
  AlgMatrix<FormalPoly<PBWElement>> m(
      N, std::vector<FormalPoly<PBWElement>>(N));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      FormalPoly<PBWElement>& e = m[i - 1][j - 1];
      e.add(0, PBWElement::constant(g, muM[i - 1][j - 1]));
      if (const auto s = span_entry(*g, i, j))
        e.add(1, PBWElement::generator(g, s->first).scaled(s->second));
    }
  return m;
}

std::vector<CPoly> phi_invariants(const LieAlgebra& g) {
  require_family(g, {AlgebraFamily::GL, AlgebraFamily::SP}, "phi_invariants");
  const auto mat = coordinate_matrix(g);
  const CPoly zero(g.context());
  const CPoly one(g.context(), Rational(1));
  std::vector<CPoly> out;
  const std::size_t N = g.matrix_size();
  const std::size_t step = g.family() == AlgebraFamily::SP ? 2 : 1;
  for (std::size_t m = step; m <= N; m += step)
    out.push_back(det_sym(mat, m, zero, one));
  return out;
}

std::vector<CPoly> psi_invariants(const LieAlgebra& g) {
  require_family(g, {AlgebraFamily::GL, AlgebraFamily::O}, "psi_invariants");
  const auto mat = coordinate_matrix(g);
  const CPoly zero(g.context());
  const CPoly one(g.context(), Rational(1));
  std::vector<CPoly> out;
  const std::size_t N = g.matrix_size();
  std::size_t hi = N, step = 1;
  if (g.family() == AlgebraFamily::O) {
    step = 2;
    hi = N % 2 == 1 ? N - 1 : N - 2;  // 2n for o_2n+1, 2n-2 for o_2n
  }
  for (std::size_t m = step; m <= hi; m += step)
    out.push_back(per_sym(mat, m, zero, one));
  return out;
}

CPoly pfaffian_invariant(const LieAlgebra& g) {
  require_family(g, {AlgebraFamily::O}, "pfaffian_invariant");
  if (g.matrix_size() % 2 != 0)
    throw std::invalid_argument("pfaffian_invariant: odd orthogonal algebra");
  const auto mat = coordinate_matrix(g);
  return pfaffian_sym(mat, CPoly(g.context()),
                      CPoly(g.context(), Rational(1)));
}

std::vector<CPoly> standard_invariants(const LieAlgebra& g) {
  switch (g.family()) {
    case AlgebraFamily::GL:
    case AlgebraFamily::SP:
      return phi_invariants(g);
    case AlgebraFamily::O: {
      std::vector<CPoly> out = psi_invariants(g);
      if (g.matrix_size() % 2 == 0) out.push_back(pfaffian_invariant(g));
      return out;
    }
    default:
      throw std::invalid_argument("standard_invariants: unsupported family");
  }
}

namespace {

// Collects [c_0, ..., c_m] with c_k the coefficient of z^{-m+k}, i.e. of
// zinv^{m-k}, from a polynomial produced over the shifted matrix.
std::vector<CPoly> collect_zinv(const LieAlgebra& g, const CPoly& p,
                                std::size_t m) {
  std::vector<CPoly> out;
  for (std::size_t k = 0; k <= m; ++k)
    out.push_back(p.extract_coeff(zinv_index(g), static_cast<uint32_t>(m - k)));
  return out;
}

std::vector<PBWElement> collect_formal(const AlgebraPtr& g,
                                       const FormalPoly<PBWElement>& p,
                                       std::size_t m) {
  const PBWElement zero(g);
  std::vector<PBWElement> out;
  for (std::size_t k = 0; k <= m; ++k)
    out.push_back(p.coefficient(static_cast<int>(m - k), zero));
  return out;
}

}  // namespace

std::vector<CPoly> shift_poly_det(const LieAlgebra& g, const Functional& mu,
                                  std::size_t m) {
  require_family(g, {AlgebraFamily::GL, AlgebraFamily::SP}, "shift_poly_det");
  const auto mat = shifted_coordinate_matrix(g, mu);
  const CPoly p = det_sym(mat, m, CPoly(g.context()),
                          CPoly(g.context(), Rational(1)));
  return collect_zinv(g, p, m);
}

std::vector<PBWElement> shift_poly_det_pbw(const AlgebraPtr& g,
                                           const Functional& mu,
                                           std::size_t m) {
  require_family(*g, {AlgebraFamily::GL, AlgebraFamily::SP},
                 "shift_poly_det");
  const auto mat = shifted_generator_matrix(g, mu);
  const FormalPoly<PBWElement> one(0, PBWElement::constant(g, Rational(1)));
  const auto p = det_sym(mat, m, FormalPoly<PBWElement>{}, one);
  return collect_formal(g, p, m);
}

std::vector<CPoly> shift_poly_per(const LieAlgebra& g, const Functional& mu,
                                  std::size_t m) {
  require_family(g, {AlgebraFamily::GL, AlgebraFamily::O}, "shift_poly_per");
  const auto mat = shifted_coordinate_matrix(g, mu);
  const CPoly p = per_sym(mat, m, CPoly(g.context()),
                          CPoly(g.context(), Rational(1)));
  return collect_zinv(g, p, m);
}

std::vector<PBWElement> shift_poly_per_pbw(const AlgebraPtr& g,
                                           const Functional& mu,
                                           std::size_t m) {
  require_family(*g, {AlgebraFamily::GL, AlgebraFamily::O}, "shift_poly_per");
  const auto mat = shifted_generator_matrix(g, mu);
  const FormalPoly<PBWElement> one(0, PBWElement::constant(g, Rational(1)));
  const auto p = per_sym(mat, m, FormalPoly<PBWElement>{}, one);
  return collect_formal(g, p, m);
}

std::vector<CPoly> shift_poly_pf(const LieAlgebra& g, const Functional& mu) {
  require_family(g, {AlgebraFamily::O}, "shift_poly_pf");
  if (g.matrix_size() % 2 != 0)
    throw std::invalid_argument("shift_poly_pf: odd orthogonal algebra");
  const auto mat = shifted_coordinate_matrix(g, mu);
  const CPoly p = pfaffian_sym(mat, CPoly(g.context()),
                               CPoly(g.context(), Rational(1)));
  return collect_zinv(g, p, g.matrix_size() / 2);
}

std::vector<PBWElement> shift_poly_pf_pbw(const AlgebraPtr& g,
                                          const Functional& mu) {
  require_family(*g, {AlgebraFamily::O}, "shift_poly_pf");
  if (g->matrix_size() % 2 != 0)
    throw std::invalid_argument("shift_poly_pf: odd orthogonal algebra");
  const auto mat = shifted_generator_matrix(g, mu);
  const FormalPoly<PBWElement> one(0, PBWElement::constant(g, Rational(1)));
  const auto p = pfaffian_sym(mat, FormalPoly<PBWElement>{}, one);
  return collect_formal(g, p, g->matrix_size() / 2);
}

}  // namespace shiftarg
