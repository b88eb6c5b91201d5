#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftarg/diagram.hpp"
#include "shiftarg/json_io.hpp"
#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/poisson.hpp"

using namespace shiftarg;

TEST_CASE("induced partitions add row-wise") {
  CHECK(induced_partition_A({Partition({2, 1}), Partition({2, 1, 1})}) ==
        Partition({4, 2, 1}));
  CHECK(induced_partition_A({Partition({3, 2})}) == Partition({3, 2}));
  CHECK(induced_partition_A({Partition({1, 1}), Partition({2, 1, 1}),
                             Partition({2, 1, 1})}) == Partition({5, 3, 2}));
  CHECK_THROWS_AS(induced_partition_A({}), std::invalid_argument);
}

TEST_CASE("kempken modification") {
  CHECK(kempken_modify(Partition({3, 3})) == Partition({3, 3}));
  CHECK(kempken_modify(Partition({5, 3, 2})) == Partition({4, 4, 2}));
  CHECK(kempken_modify(Partition({2, 2})) == Partition({2, 2}));
  CHECK(kempken_modify(Partition({3, 1})) == Partition({2, 2}));
  CHECK_THROWS_AS(kempken_modify(Partition({2, 1})), std::invalid_argument);
  // Output is admissible with the total preserved, whenever it exists.
  for (std::size_t total = 2; total <= 12; total += 2)
    for (const auto& pi : all_partitions(total)) {
      try {
        const Partition out = kempken_modify(pi);
        CHECK(symplectically_admissible(out));
        CHECK(out.total() == pi.total());
      } catch (const std::invalid_argument&) {
        // Stuck inputs are allowed; they signal inadmissible data.
      }
    }
}

TEST_CASE("row_index") {
  const Partition pg({4, 4, 2});
  CHECK(row_index(pg, 2) == 1);
  CHECK(row_index(pg, 4) == 1);
  CHECK(row_index(pg, 6) == 2);
  CHECK(row_index(pg, 8) == 2);
  CHECK(row_index(pg, 10) == 3);
  const Partition p21({2, 1});
  CHECK(row_index(p21, 1) == 1);
  CHECK(row_index(p21, 2) == 1);
  CHECK(row_index(p21, 3) == 2);
  CHECK(row_index(Partition({5}), 1) == 1);
  CHECK_THROWS_AS(row_index(p21, 4), std::invalid_argument);
  CHECK_THROWS_AS(row_index(p21, 0), std::invalid_argument);
}

TEST_CASE("generator sets in type A") {
  SUBCASE("regular nilpotent keeps the whole staircase") {
    const auto s = generator_set_A(4, Partition({4}));
    CHECK(s.cells.size() == 10);
    CHECK(s.excluded.empty());
    for (auto v : s.sigma_shape) CHECK(v == 0);
  }
  SUBCASE("zero orbit keeps only the centre column") {
    const auto s = generator_set_A(3, Partition({1, 1, 1}));
    CHECK(s.cells ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {3, 0}, {2, 0}, {1, 0}});
  }
  SUBCASE("(2,1) in gl_3") {
    const auto s = generator_set_A(3, Partition({2, 1}));
    CHECK(s.cells.size() == 5);
    CHECK(s.cells ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {3, 1}, {3, 0}, {2, 1}, {2, 0}, {1, 0}});
  }
  CHECK_THROWS_AS(generator_set_A(4, Partition({2, 1})),
                  std::invalid_argument);
}

TEST_CASE("generator sets in type C") {
  SUBCASE("the sp_10 example") {
    const auto s = generator_set_C(5, Partition({4, 4, 2}));
    CHECK(s.sigma_shape == std::vector<std::size_t>{2, 1, 1, 0, 0});
    CHECK(s.excluded ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {10, 9}, {10, 8}, {8, 7}, {6, 5}});
    CHECK(s.cells.size() == 26);
  }
  SUBCASE("regular mu has empty sigma") {
    const auto s = generator_set_C(3, Partition({6}));
    for (auto v : s.sigma_shape) CHECK(v == 0);
    CHECK(s.cells.size() == 6 + 4 + 2);
  }
  SUBCASE("mu = 0 keeps the centre column") {
    const auto s = generator_set_C(3, Partition({1, 1, 1, 1, 1, 1}));
    CHECK(s.sigma_shape == std::vector<std::size_t>{5, 3, 1});
    CHECK(s.cells ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {6, 0}, {4, 0}, {2, 0}});
  }
  CHECK_THROWS_AS(generator_set_C(2, Partition({3, 1})),
                  std::invalid_argument);
}

TEST_CASE("expected generator counts") {
  const auto gl3 = build_gl(3);
  const Functional f = jordan_to_functional(*gl3, {{Rational(0), {2, 1}}});
  CHECK(expected_generator_count(*gl3, f) == 5);
  const Functional zero{QVector(9, Rational(0)), std::nullopt};
  CHECK(expected_generator_count(*gl3, zero) == 3);
  // The sp_10 example resolves to 26 = 30 - 4 staircase cells.
  const auto sp10 = build_classical(ClassicalType::C, 5);
  const Functional mu = jordan_to_functional(
      *sp10, {{Rational(0), {1, 1}},
              {Rational(1), {2, 1, 1}},
              {Rational(-1), {2, 1, 1}}});
  CHECK(expected_generator_count(*sp10, mu) == 26);
  CHECK(generator_set_C(5, Partition({4, 4, 2})).cells.size() == 26);
}

TEST_CASE("the two r(m) definitions agree on induced type-C data") {
  // Enumerate admissible symplectic Jordan data: an admissible zero diagram
  // plus +/- pairs of equal diagrams, then compare row_index on the
  // modified partition with the row-tableau reading of the row-sum.
  for (std::size_t total = 2; total <= 12; total += 2) {
    for (std::size_t zero_part = 0; zero_part <= total; zero_part += 2) {
      const std::size_t pair_part = (total - zero_part) / 2;
      std::vector<Partition> zeros =
          zero_part == 0 ? std::vector<Partition>{Partition()}
                         : symplectic_partitions(zero_part);
      std::vector<Partition> pairs =
          pair_part == 0 ? std::vector<Partition>{Partition()}
                         : all_partitions(pair_part);
      for (const auto& z : zeros) {
        for (const auto& p : pairs) {
          std::vector<Partition> blocks;
          if (!z.empty()) blocks.push_back(z);
          if (!p.empty()) {
            blocks.push_back(p);
            blocks.push_back(p);
          }
          if (blocks.empty()) continue;
          const Partition pi = induced_partition_A(blocks);
          const Partition pg = kempken_modify(pi);
          for (std::size_t m = 2; m <= total; m += 2)
            CHECK(row_index(pg, m) == row_index(pi, m));
        }
      }
    }
  }
}

TEST_CASE("cell counts match the staircase bound") {
  for (std::size_t N = 2; N <= 5; ++N)
    for (const auto& pi : all_partitions(N)) {
      const auto s = generator_set_A(N, pi);
      std::size_t expect = 0;
      for (std::size_t m = 1; m <= N; ++m)
        expect += m - row_index(pi, m) + 1;
      CHECK(s.cells.size() == expect);
      CHECK(s.cells.size() + s.excluded.size() == N * (N + 1) / 2);
    }
  for (std::size_t n = 1; 2 * n <= 8; ++n)
    for (const auto& pi : symplectic_partitions(2 * n)) {
      const auto s = generator_set_C(n, pi);
      std::size_t expect = 0;
      for (std::size_t m = 1; m <= n; ++m)
        expect += 2 * m - row_index(pi, 2 * m) + 1;
      CHECK(s.cells.size() == expect);
    }
}

TEST_CASE("staircase k-ranges match the top-degree table in type A") {
  // The kept range 0 <= k <= m - r(m) mirrors deg Phi_m - deg ^g Phi_m,
  // i.e. deg ^g Phi_m = r(m) for every nilpotent shape of gl_N, N <= 4.
  for (std::size_t N = 2; N <= 4; ++N) {
    const auto g = build_gl(N);
    const auto invariants = phi_invariants(*g);
    for (const auto& pi : all_partitions(N)) {
      const Functional gamma = jordan_to_functional(
          *g, std::vector<JordanBlockData>{{Rational(0), pi.rows()}});
      const auto rep = degrees_top(g, invariants, gamma);
      for (std::size_t m = 1; m <= N; ++m)
        CHECK(rep.degrees[m - 1] ==
              static_cast<int64_t>(row_index(pi, m)));
    }
  }
}

TEST_CASE("diagram_from_jordan emits the golden JSON") {
  const std::vector<LabelledJordanBlock> blocks{
      {"0", Partition({1, 1})},
      {"l", Partition({2, 1, 1})},
      {"-l", Partition({2, 1, 1})}};
  const DiagramReport rep = diagram_from_jordan('C', blocks);
  CHECK(rep.pi == Partition({5, 3, 2}));
  CHECK(rep.pi_gamma == Partition({4, 4, 2}));
  const std::string json = diagram_report_json(rep);
  CHECK(json ==
        R"({"Pi":[5,3,2],"Pi_gamma":[4,4,2],"r":{"2":1,"4":1,"6":2,"8":2,)"
        R"("10":3},"sigma":[2,1,1,0,0],"cells":[[10,7],[10,6],[10,5],[10,4)"
        R"(],[10,3],[10,2],[10,1],[10,0],[8,6],[8,5],[8,4],[8,3],[8,2],[8,)"
        R"(1],[8,0],[6,4],[6,3],[6,2],[6,1],[6,0],[4,3],[4,2],[4,1],[4,0],)"
        R"([2,1],[2,0]],"excluded":[[10,9],[10,8],[8,7],[6,5]]})");
  // Mismatched +/- pairs are rejected.
  CHECK_THROWS_AS(
      diagram_from_jordan('C', {{"l", Partition({2})}, {"m", Partition({2})}}),
      std::invalid_argument);
  // Type A keeps the partition untouched.
  const DiagramReport repA =
      diagram_from_jordan('A', {{"1", Partition({2, 1})}});
  CHECK(repA.pi_gamma == repA.pi);
}
