#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftarg/json_io.hpp"
#include "shiftarg/poly.hpp"
#include "shiftarg/random.hpp"

using namespace shiftarg;

namespace {

ContextPtr ctx3() { return make_context({"x1", "x2", "x3", "u", "zinv"}, 3); }

CPoly var(const ContextPtr& c, uint32_t i) { return CPoly::variable(c, i); }

}  // namespace

TEST_CASE("addition cancels and respects identities") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1);
  CHECK((x1 + x2) - x1 == x2);
  CHECK(x1 + CPoly(c) == x1);
  const CPoly half_sq = (x1 * x1).scaled(rat(1, 2));
  CHECK(half_sq + half_sq == x1 * x1);
}

TEST_CASE("multiplication expands exactly") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK(x1 * CPoly(c, 1) == x1);
  const CPoly p = x1 * x2;
  CHECK(p.term_count() == 1);
  CHECK(p.coefficient(Monomial({{0, 1}, {1, 1}})) == 1);
}

TEST_CASE("context mismatch is rejected") {
  const auto a = ctx3();
  const auto b = make_context({"y1", "y2"}, 2);
  CHECK_THROWS_AS(var(a, 0) + CPoly::variable(b, 0), std::invalid_argument);
  CHECK_THROWS_AS(var(a, 0) * CPoly::variable(b, 1), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1);
  CHECK((x1 * x1 * x2).partial(0) == (x1 * x2).scaled(2));
  CHECK(x2.partial(0).is_zero());
  CHECK(CPoly(c, 7).partial(0).is_zero());
}

TEST_CASE("evaluation is exact") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1), x3 = var(c, 2);
  const CPoly p = x1 * x2 - x3;
  using Point = std::map<uint32_t, Rational>;
  CHECK(p.eval(Point{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}}) ==
        5);
  CHECK(CPoly(c, 7).eval(Point{}) == 7);
  CHECK((x1 * x1).eval(Point{{0, rat(-1, 2)}}) == rat(1, 4));
  CHECK_THROWS_AS(p.eval(Point{{0, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("directional derivative") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1);
  const CPoly p = x1 * x2;
  CHECK(p.directional_derivative({Rational(1), Rational(0), Rational(0)}) ==
        x2);
  const Rational a = 3, b = -2;
  CHECK(p.directional_derivative({a, b, Rational(0)}) ==
        x2.scaled(a) + x1.scaled(b));
  // Degree drop: d+1 derivatives of a degree-d homogeneous kill it.
  CPoly d = p;
  for (int k = 0; k < 3; ++k)
    d = d.directional_derivative({a, b, Rational(1)});
  CHECK(d.is_zero());
  CHECK_THROWS_AS(p.directional_derivative({a}), std::invalid_argument);
}

TEST_CASE("shift_expand against the substitution oracle") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1);
  SUBCASE("binomial case") {
    const auto parts = shift_expand(x1 * x2, {Rational(1), Rational(1), Rational(0)});
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == x1 * x2);
    CHECK(parts[1] == x1 + x2);
    CHECK(parts[2] == CPoly(c, 1));
  }
  SUBCASE("zero direction") {
    const auto parts = shift_expand(x1 * x2, {Rational(0), Rational(0), Rational(0)});
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == x1 * x2);
    CHECK(parts[1].is_zero());
    CHECK(parts[2].is_zero());
  }
  SUBCASE("generic 2x2 determinant vs substitute-and-collect") {
    // det of a generic 2x2 in commuting variables; the oracle substitutes
    // x -> x + t*gamma with t riding on the formal u and collects powers.
    const auto c4 = make_context({"a", "b", "cc", "d", "u", "zinv"}, 4);
    const CPoly det = CPoly::variable(c4, 0) * CPoly::variable(c4, 3) -
                      CPoly::variable(c4, 1) * CPoly::variable(c4, 2);
    const std::vector<Rational> gamma{rat(2), rat(-3), rat(1, 2), rat(5)};
    const auto parts = shift_expand(det, gamma);
    const CPoly u = CPoly::variable(c4, 4);
    std::map<uint32_t, CPoly> subs;
    for (uint32_t i = 0; i < 4; ++i)
      subs.emplace(i, CPoly::variable(c4, i) + u.scaled(gamma[i]));
    const CPoly shifted = det.substitute(subs);
    REQUIRE(parts.size() == 3);
    for (uint32_t k = 0; k <= 2; ++k)
      CHECK(shifted.extract_coeff(4, k) == parts[k]);
  }
  SUBCASE("non-homogeneous input is rejected") {
    CHECK_THROWS_AS(shift_expand(x1 + x1 * x2, {Rational(1), Rational(0), Rational(0)}),
                    std::invalid_argument);
  }
}

TEST_CASE("extract_coeff and reconstruction") {
  const auto c = ctx3();
  const CPoly x1 = var(c, 0), x2 = var(c, 1), u = var(c, 3);
  const CPoly p = u * u * x1 + u * x2;
  CHECK(p.extract_coeff(3, 1) == x2);
  CHECK(p.extract_coeff(3, 5).is_zero());
  CPoly rebuilt(c);
  for (uint32_t k = 0; k <= p.max_power(3); ++k) {
    CPoly layer = p.extract_coeff(3, k);
    for (uint32_t t = 0; t < k; ++t) layer = layer * u;
    rebuilt = rebuilt + layer;
  }
  CHECK(rebuilt == p);
}

TEST_CASE("ring axioms on random triples") {
  const auto c = ctx3();
  Sampler smp(17);
  const auto rand_poly = [&] {
    CPoly p(c);
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      const int deg = static_cast<int>(smp.int_in(0, 3));
      for (int d = 0; d < deg; ++d)
        m = m * Monomial::variable(static_cast<uint32_t>(smp.int_in(0, 2)));
      p.add_term(m, smp.rational(-5, 5));
    }
    return p;
  };
  for (int t = 0; t < 25; ++t) {
    const CPoly a = rand_poly(), b = rand_poly(), d = rand_poly();
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("shift expansion sums back at rational points") {
  const auto c = ctx3();
  Sampler smp(99);
  for (int t = 0; t < 20; ++t) {
    CPoly p(c);
    const int deg = 1 + static_cast<int>(smp.int_in(0, 3));
    for (int term = 0; term < 3; ++term) {
      Monomial m;
      for (int d = 0; d < deg; ++d)
        m = m * Monomial::variable(static_cast<uint32_t>(smp.int_in(0, 2)));
      p.add_term(m, smp.rational(-5, 5));
    }
    if (p.is_zero()) continue;
    std::vector<Rational> gamma{smp.rational(), smp.rational(), smp.rational()};
    const auto parts = shift_expand(p, gamma);
    CHECK(parts.size() == static_cast<std::size_t>(deg) + 1);
    const std::vector<Rational> x{smp.rational(), smp.rational(),
                                  smp.rational()};
    const Rational tval = smp.rational(-4, 4);
    Rational lhs = 0, tpow = 1;
    for (const auto& part : parts) {
      lhs += tpow * part.eval(x);
      tpow *= tval;
    }
    std::vector<Rational> shifted;
    for (std::size_t i = 0; i < 3; ++i) shifted.push_back(x[i] + tval * gamma[i]);
    CHECK(lhs == p.eval(shifted));
  }
}

TEST_CASE("directional derivative equals the t-coefficient of substitution") {
  const auto c = ctx3();
  Sampler smp(7);
  for (int t = 0; t < 50; ++t) {
    CPoly p(c);
    for (int term = 0; term < 4; ++term) {
      Monomial m;
      const int deg = static_cast<int>(smp.int_in(0, 3));
      for (int d = 0; d < deg; ++d)
        m = m * Monomial::variable(static_cast<uint32_t>(smp.int_in(0, 2)));
      p.add_term(m, smp.rational(-5, 5));
    }
    const std::vector<Rational> gamma{smp.rational(), smp.rational(),
                                      smp.rational()};
    const CPoly u = var(c, 3);
    std::map<uint32_t, CPoly> subs;
    for (uint32_t i = 0; i < 3; ++i)
      subs.emplace(i, var(c, i) + u.scaled(gamma[i]));
    CHECK(p.substitute(subs).extract_coeff(3, 1) ==
          p.directional_derivative(gamma));
  }
}

TEST_CASE("JSON round trip is bit-exact") {
  const auto c = ctx3();
  const CPoly p = var(c, 0) * var(c, 1).scaled(rat(-7, 3)) + CPoly(c, rat(1, 2)) +
                  var(c, 2) * var(c, 2) * var(c, 0);
  const std::string once = poly_to_json(p);
  const CPoly q = poly_from_json(once);
  CHECK(q == p);
  CHECK(poly_to_json(q) == once);
  CHECK(poly_from_json(poly_to_json(CPoly(c))).is_zero());
}
