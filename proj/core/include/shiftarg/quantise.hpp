#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/pbw.hpp"
#include "shiftarg/poisson.hpp"

namespace shiftarg {

struct CommuteReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  bool ok() const { return failures.empty(); }
};

/// All pairwise commutators [e_i, e_j], i < j; pairs fan out over `jobs`
/// worker threads and the failure list is merged deterministically.
CommuteReport pairwise_commutator_check(const std::vector<PBWElement>& elems,
                                        unsigned jobs = 1);

/// Poisson analogue over S(g).
CommuteReport pairwise_poisson_check(const LieAlgebra& g,
                                     const std::vector<CPoly>& elems,
                                     unsigned jobs = 1);

/// Which generator family to assemble.
enum class GeneratorKind {
  Default,      // Det for GL/SP, Per for o_2n+1, Per + Pfaffian for o_2n
  Det,          // symmetrised minors
  Per,          // symmetrised permanents
};

struct GeneratorFamily {
  AlgebraPtr algebra;
  std::vector<PBWElement> elements;
  std::vector<std::string> names;  // "Phi[m,k]", "Psi[m,k]", "Pf[k]"
  std::vector<std::string> dropped;
};

/// The commutative-subalgebra generators: symmetrised mu-shifts of the
/// invariant family, assembled from the z^-1 coefficients of
/// Det_m(mu + E z^-1) / Per_m / Pf. Zero shifts are dropped and recorded.
GeneratorFamily a_mu_generators(const AlgebraPtr& g, const Functional& mu,
                                GeneratorKind kind = GeneratorKind::Default);

struct GradedCheckReport {
  struct Row {
    std::size_t degree;
    std::size_t mf_dim;        // span of shift-family products, degree d
    std::size_t gr_dim;        // graded image of the quantised span
    bool mf_inside_gr;
    bool gr_inside_mf;
  };
  std::vector<Row> rows;
  bool two_sided_equal() const {
    for (const auto& r : rows)
      if (!(r.mf_inside_gr && r.gr_inside_mf && r.mf_dim == r.gr_dim))
        return false;
    return true;
  }
};

/// Degree-by-degree comparison of gr A_mu with the commutative shift
/// family, both truncated to products of total degree <= max_degree. The
/// graded side takes the image in S^d of (span of ordered generator
/// products) intersected with filtration degree <= d, so cancellations of
/// leading terms are accounted for. Exact span equality over Q.
GradedCheckReport graded_image_check(const AlgebraPtr& g, const Functional& mu,
                                     std::size_t max_degree,
                                     GeneratorKind kind = GeneratorKind::Default);

struct CentraliserQuantisation {
  AlgebraPtr centraliser;            // q = g_gamma with induced brackets
  std::vector<CPoly> top_components;  // P_i = ^gamma H_i in q-coordinates
  std::vector<PBWElement> elements;   // varpi_q(d_nu^k P_i), nonzero ones
};

/// Quantised shift family of the nilpotent centraliser: builds
/// q = stabiliser(gamma), expresses P_i = ^gamma H_i in q-coordinates and
/// returns the symmetrised nu-shifts over U(q). gamma must be nilpotent.
CentraliserQuantisation centraliser_quantisation(const AlgebraPtr& g,
                                                 const Functional& gamma,
                                                 const QVector& nu_values);

/// Maximal Jacobian rank over sampled rational points: a certified lower
/// bound for the transcendence degree of the generated subalgebra.
std::size_t independence_witness(const std::vector<CPoly>& elems,
                                 std::size_t trials, uint64_t seed);

}  // namespace shiftarg
