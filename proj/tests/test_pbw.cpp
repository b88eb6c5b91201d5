#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "shiftarg/pbw.hpp"
#include "shiftarg/poisson.hpp"
#include "shiftarg/matrix_invariants.hpp"
#include "test_util.hpp"

using namespace shiftarg;
using namespace shiftarg::testing;

TEST_CASE("products straighten to normal form") {
  const auto g = build_gl(2);
  const PBWElement e12 = gen(g, "E_1_2"), e21 = gen(g, "E_2_1");
  SUBCASE("ordered words multiply by concatenation") {
    const PBWElement p = e12 * e21;
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->first == Word{1, 2});
  }
  SUBCASE("out-of-order products pick up the bracket") {
    // E_21 E_12 = E_12 E_21 - (E_11 - E_22); cross-check the commutator
    // against the defining 2x2 matrix bracket.
    const PBWElement p = e21 * e12;
    const PBWElement expect =
        e12 * e21 - gen(g, "E_1_1") + gen(g, "E_2_2");
    CHECK(p == expect);
    const QMatrix m12 = g->basis_matrix(1), m21 = g->basis_matrix(2);
    QMatrix mc = q_mul(m12, m21);
    const QMatrix m_rev = q_mul(m21, m12);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) mc[i][j] -= m_rev[i][j];
    // mc = E_11 - E_22, matching [E_12, E_21] from straightening.
    CHECK(u_commutator(e12, e21) ==
          gen(g, "E_1_1") - gen(g, "E_2_2"));
    CHECK(mc == q_add(g->basis_matrix(0),
                      q_scale(g->basis_matrix(3), Rational(-1))));
  }
  SUBCASE("one is a unit") {
    const PBWElement one = PBWElement::constant(g, Rational(1));
    const PBWElement a = e12 * e21 + e12.scaled(rat(2, 3));
    CHECK(a * one == a);
    CHECK(one * a == a);
  }
}

TEST_CASE("commutators") {
  const auto g = build_gl(2);
  const PBWElement a = gen(g, "E_1_1") * gen(g, "E_1_2");
  CHECK(u_commutator(a, a).is_zero());
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) {
      PBWElement expect(g);
      for (const auto& [k, c] : g->bracket(i, j)) expect.add_term(Word{k}, c);
      CHECK(u_commutator(PBWElement::generator(g, i),
                         PBWElement::generator(g, j)) == expect);
    }
  // The Casimir is central.
  const CPoly phi2 = phi_invariants(*g)[1];
  const PBWElement casimir = symmetrise(g, phi2);
  CHECK(u_commutator(casimir, gen(g, "E_1_2")).is_zero());
}

TEST_CASE("symmetrise") {
  const auto g = build_gl(2);
  SUBCASE("degree one is the identity") {
    CHECK(symmetrise(g, coord(g, "E_2_1")) == gen(g, "E_2_1"));
  }
  SUBCASE("two orderings average") {
    const PBWElement v = symmetrise(g, coord(g, "E_1_1") * coord(g, "E_1_2"));
    const PBWElement expect =
        (gen(g, "E_1_1") * gen(g, "E_1_2") + gen(g, "E_1_2") * gen(g, "E_1_1"))
            .scaled(rat(1, 2));
    CHECK(v == expect);
  }
  SUBCASE("gr after symmetrise is the identity on homogeneous input") {
    Sampler smp(31);
    for (int t = 0; t < 30; ++t) {
      const int deg = 1 + static_cast<int>(smp.int_in(0, 5));
      const CPoly p = random_homogeneous(g, smp, deg);
      if (p.is_zero()) continue;
      CHECK(symbol(symmetrise(g, p)) == p);
    }
  }
}

TEST_CASE("symbol") {
  const auto g = build_gl(2);
  const PBWElement a = gen(g, "E_1_1") * gen(g, "E_1_2") + gen(g, "E_2_2");
  CHECK(symbol(a) == coord(g, "E_1_1") * coord(g, "E_1_2"));
  CHECK_THROWS_AS(symbol(PBWElement(g)), std::invalid_argument);
  SUBCASE("symbol of a commutator matches the Poisson bracket") {
    Sampler smp(77);
    for (int t = 0; t < 12; ++t) {
      const CPoly pa = random_homogeneous(g, smp, 2),
                  pb = random_homogeneous(g, smp, 2);
      if (pa.is_zero() || pb.is_zero()) continue;
      const PBWElement ua = symmetrise(g, pa), ub = symmetrise(g, pb);
      const CPoly pois = poisson_bracket(*g, pa, pb);
      const PBWElement comm = u_commutator(ua, ub);
      if (!pois.is_zero()) {
        REQUIRE_FALSE(comm.is_zero());
        CHECK(symbol(comm) == pois);
      }
    }
  }
}

TEST_CASE("centre_check") {
  const auto g = build_gl(2);
  const auto phis = phi_invariants(*g);
  std::vector<PBWElement> centre{symmetrise(g, phis[0]), symmetrise(g, phis[1])};
  CHECK(centre_check(*g, centre).ok());
  CHECK_FALSE(centre_check(*g, {gen(g, "E_1_2")}).ok());
  CHECK(centre_check(*g, {}).ok());
}

TEST_CASE("associativity and filtration degrees") {
  const auto g = build_gl(2);
  Sampler smp(13);
  const auto random_pbw = [&] {
    PBWElement e(g);
    for (int t = 0; t < 3; ++t) {
      Word w;
      const int len = static_cast<int>(smp.int_in(0, 3));
      for (int d = 0; d < len; ++d)
        w.push_back(static_cast<uint32_t>(smp.int_in(0, 3)));
      std::sort(w.begin(), w.end());
      e.add_term(w, smp.rational(-5, 5));
    }
    return e;
  };
  for (int t = 0; t < 15; ++t) {
    const PBWElement a = random_pbw(), b = random_pbw(), c = random_pbw();
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).degree() <= a.degree() + b.degree());
      // The symbols never cancel in a domain, so equality holds.
      CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("symmetrisation is equivariant under the adjoint action") {
  const auto g = build_gl(2);
  Sampler smp(59);
  for (int t = 0; t < 12; ++t) {
    const CPoly p = random_poly(g, smp, 3);
    for (uint32_t k = 0; k < g->dim(); ++k) {
      const CPoly x = CPoly::variable(g->context(), k);
      const CPoly lhs = poisson_bracket(*g, x, p);
      CHECK(symmetrise(g, lhs) ==
            u_commutator(PBWElement::generator(g, k), symmetrise(g, p)));
    }
  }
}

TEST_CASE("straightening is confluent") {
  const auto g = build_gl(2);
  const auto sp4 = build_classical(ClassicalType::C, 2);
  Sampler smp(101);
  for (int t = 0; t < 40; ++t) {
    const auto& alg = t % 2 == 0 ? g : sp4;
    Word w;
    const int len = 1 + static_cast<int>(smp.int_in(0, 4));
    for (int d = 0; d < len; ++d)
      w.push_back(static_cast<uint32_t>(smp.int_in(0, alg->dim() - 1)));
    const PBWElement left = straighten_reference(alg, w, true);
    const PBWElement right = straighten_reference(alg, w, false);
    CHECK(left == right);
    // The memoized product path agrees with the naive rewriting.
    PBWElement folded = PBWElement::constant(alg, Rational(1));
    for (auto letter : w) folded = folded * PBWElement::generator(alg, letter);
    CHECK(folded == left);
  }
}
