#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftarg/quantise.hpp"
#include "test_util.hpp"

using namespace shiftarg;
using namespace shiftarg::testing;

TEST_CASE("a_mu_generators") {
  const auto g = build_gl(2);
  SUBCASE("regular semisimple mu on gl_2") {
    const Functional mu = jordan_to_functional(
        *g, {{Rational(1), {1}}, {Rational(2), {1}}});
    const GeneratorFamily fam = a_mu_generators(g, mu);
    CHECK(fam.elements.size() == 3);
    CHECK(pairwise_commutator_check(fam.elements).ok());
  }
  SUBCASE("regular nilpotent mu on sp_4") {
    const auto sp4 = build_classical(ClassicalType::C, 2);
    const Functional mu = jordan_to_functional(*sp4, {{Rational(0), {4}}});
    const GeneratorFamily fam = a_mu_generators(sp4, mu);
    CHECK(fam.elements.size() == 6);  // full staircase (4,2)
    CHECK(pairwise_commutator_check(fam.elements, 2).ok());
  }
  SUBCASE("mu = 0 produces central elements") {
    const Functional zero{QVector(4, Rational(0)), std::nullopt};
    const GeneratorFamily fam = a_mu_generators(g, zero);
    CHECK(fam.elements.size() == 2);
    CHECK(centre_check(*g, fam.elements).ok());
  }
  SUBCASE("family selection errors") {
    const auto sp4 = build_classical(ClassicalType::C, 2);
    const Functional zero{QVector(10, Rational(0)), std::nullopt};
    CHECK_THROWS_AS(a_mu_generators(sp4, zero, GeneratorKind::Per),
                    std::invalid_argument);
    const auto o3 = build_classical(ClassicalType::B, 1);
    const Functional z3{QVector(3, Rational(0)), std::nullopt};
    CHECK_THROWS_AS(a_mu_generators(o3, z3, GeneratorKind::Det),
                    std::invalid_argument);
  }
}

TEST_CASE("quantised families centralise the stabiliser of mu") {
  const auto g = build_gl(3);
  const Functional mu = jordan_to_functional(*g, {{Rational(0), {2, 1}}});
  const GeneratorFamily fam = a_mu_generators(g, mu);
  const Subspace stab = stabiliser(*g, mu);
  for (const auto& row : stab.basis) {
    PBWElement xi(g);
    for (uint32_t i = 0; i < g->dim(); ++i)
      if (!is_zero(row[i]))
        xi = xi + PBWElement::generator(g, i).scaled(row[i]);
    for (const auto& e : fam.elements)
      CHECK(u_commutator(xi, e).is_zero());
  }
}

TEST_CASE("graded_image_check") {
  const auto g = build_gl(2);
  SUBCASE("sampled mu up to degree 3") {
    Sampler smp(6);
    const Functional mu =
        functional_from_matrix(*g, g->element_matrix(smp.vector(4)));
    const auto rep = graded_image_check(g, mu, 3);
    CHECK(rep.two_sided_equal());
    REQUIRE(rep.rows.size() == 3);
  }
  SUBCASE("degree 1 spans agree for regular semisimple mu") {
    const Functional mu = jordan_to_functional(
        *g, {{Rational(1), {1}}, {Rational(2), {1}}});
    const auto rep = graded_image_check(g, mu, 1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].mf_dim == rep.rows[0].gr_dim);
    CHECK(rep.rows[0].mf_inside_gr);
    CHECK(rep.rows[0].gr_inside_mf);
  }
  SUBCASE("sp_4 nilpotent mu to degree 3") {
    const auto sp4 = build_classical(ClassicalType::C, 2);
    const Functional mu = jordan_to_functional(*sp4, {{Rational(0), {2, 2}}});
    CHECK(graded_image_check(sp4, mu, 3).two_sided_equal());
  }
}

TEST_CASE("centraliser_quantisation") {
  SUBCASE("abelian centraliser on gl_2") {
    const auto g = build_gl(2);
    const Functional gamma = jordan_to_functional(*g, {{Rational(0), {2}}});
    const auto cq = centraliser_quantisation(g, gamma, QVector{rat(1), rat(2)});
    CHECK(cq.centraliser->dim() == 2);
    CHECK(pairwise_commutator_check(cq.elements).ok());
    // Abelian: every pair of words commutes on the nose.
    for (uint32_t i = 0; i < 2; ++i)
      for (uint32_t j = 0; j < 2; ++j)
        CHECK(u_commutator(PBWElement::generator(cq.centraliser, i),
                           PBWElement::generator(cq.centraliser, j))
                  .is_zero());
  }
  SUBCASE("gl_3 type (2,1) with random nu") {
    const auto g = build_gl(3);
    const Functional gamma = jordan_to_functional(*g, {{Rational(0), {2, 1}}});
    Sampler smp(15);
    for (int round = 0; round < 3; ++round) {
      const auto cq =
          centraliser_quantisation(g, gamma, smp.vector(5));
      CHECK(cq.centraliser->dim() == 5);
      CHECK(cq.top_components.size() == 3);
      CHECK(pairwise_commutator_check(cq.elements).ok());
    }
  }
  SUBCASE("nu = 0 gives the symmetrised invariants of q") {
    const auto g = build_gl(3);
    const Functional gamma = jordan_to_functional(*g, {{Rational(0), {2, 1}}});
    const auto cq =
        centraliser_quantisation(g, gamma, QVector(5, Rational(0)));
    CHECK(cq.elements.size() == 3);  // one per invariant, shifts vanish
    CHECK(pairwise_commutator_check(cq.elements).ok());
  }
  SUBCASE("non-nilpotent gamma is rejected") {
    const auto g = build_gl(2);
    const Functional ss = jordan_to_functional(
        *g, {{Rational(1), {1}}, {Rational(2), {1}}});
    CHECK_THROWS_AS(centraliser_quantisation(g, ss, QVector(2, Rational(0))),
                    std::invalid_argument);
  }
}

TEST_CASE("independence witness") {
  const auto g = build_gl(2);
  SUBCASE("MF family at regular semisimple gamma has rank b(gl_2)") {
    const Functional gamma = jordan_to_functional(
        *g, {{Rational(1), {1}}, {Rational(2), {1}}});
    const MFFamily fam = mf_family(g, phi_invariants(*g), gamma);
    CHECK(independence_witness(fam.polys(), 4, 3) == 3);
  }
  SUBCASE("algebraic dependence caps the rank") {
    const CPoly x = coord(g, "E_1_1");
    CHECK(independence_witness({x, x * x}, 4, 3) == 1);
  }
  SUBCASE("gl_3 nilpotent (2,1) reaches the orbit bound") {
    const auto g3 = build_gl(3);
    const Functional gamma = jordan_to_functional(*g3, {{Rational(0), {2, 1}}});
    const MFFamily fam = mf_family(g3, phi_invariants(*g3), gamma);
    CHECK(independence_witness(fam.polys(), 4, 3) == 5);
  }
}
