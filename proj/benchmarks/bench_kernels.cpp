#include <benchmark/benchmark.h>

#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/pbw.hpp"
#include "shiftarg/poisson.hpp"
#include "shiftarg/quantise.hpp"
#include "shiftarg/random.hpp"

using namespace shiftarg;

namespace {

CPoly random_dense_poly(const AlgebraPtr& g, Sampler& smp, int deg, int terms) {
  CPoly p(g->context());
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int d = 0; d < deg; ++d)
      m = m * Monomial::variable(
                  static_cast<uint32_t>(smp.int_in(0, g->dim() - 1)));
    p.add_term(m, smp.rational(-9, 9));
  }
  return p;
}

void BM_poly_mul(benchmark::State& state) {
  const auto g = build_gl(3);
  Sampler smp(1);
  const CPoly a = random_dense_poly(g, smp, 3, 40);
  const CPoly b = random_dense_poly(g, smp, 3, 40);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul);

void BM_poisson_bracket(benchmark::State& state) {
  const auto g = build_gl(3);
  Sampler smp(2);
  const CPoly a = random_dense_poly(g, smp, 3, 20);
  const CPoly b = random_dense_poly(g, smp, 3, 20);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(*g, a, b));
}
BENCHMARK(BM_poisson_bracket);

void BM_straighten_commutator(benchmark::State& state) {
  // Fresh algebra per iteration so the memo does not carry over; this is
  // the cold-cache cost of a degree-4 x degree-4 commutator in U(sp_4).
  for (auto _ : state) {
    state.PauseTiming();
    const auto g = build_classical(ClassicalType::C, 2);
    const auto phis = phi_invariants(*g);
    const PBWElement a = symmetrise(g, phis[1]);
    const PBWElement b = symmetrise(g, phis[0]);
    state.ResumeTiming();
    benchmark::DoNotOptimize(u_commutator(a, b));
  }
}
BENCHMARK(BM_straighten_commutator);

void BM_det_sym_pbw(benchmark::State& state) {
  const auto g = build_classical(ClassicalType::C, 2);
  Sampler smp(3);
  const Functional mu =
      functional_from_matrix(*g, g->element_matrix(smp.vector(g->dim())));
  for (auto _ : state)
    benchmark::DoNotOptimize(shift_poly_det_pbw(g, mu, 4));
}
BENCHMARK(BM_det_sym_pbw);

void BM_stabiliser(benchmark::State& state) {
  const auto g = build_classical(ClassicalType::C, 5);
  Sampler smp(4);
  const Functional f{smp.vector(g->dim()), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(stabiliser(*g, f));
}
BENCHMARK(BM_stabiliser);

void BM_symmetrise_deg6(benchmark::State& state) {
  const auto g = build_gl(2);
  Sampler smp(5);
  const CPoly p = random_dense_poly(g, smp, 6, 8);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrise(g, p));
}
BENCHMARK(BM_symmetrise_deg6);

}  // namespace

BENCHMARK_MAIN();
