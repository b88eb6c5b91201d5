#include "shiftarg/verifier.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "shiftarg/diagram.hpp"
#include "shiftarg/json_io.hpp"
#include "shiftarg/limits_gt.hpp"
#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/oracles.hpp"
#include "shiftarg/quantise.hpp"
#include "shiftarg/random.hpp"

namespace shiftarg {

using ojson = nlohmann::ordered_json;

namespace {

Partition partition_from_json(const ojson& arr) {
  std::vector<std::size_t> rows;
  for (const auto& v : arr) rows.push_back(v.get<std::size_t>());
  return Partition(std::move(rows));
}

GeneratorKind kind_from_string(const std::string& s) {
  if (s == "det") return GeneratorKind::Det;
  if (s == "per") return GeneratorKind::Per;
  return GeneratorKind::Default;
}

Functional nilpotent_from_partition(const AlgebraPtr& g, const Partition& pi) {
  return jordan_to_functional(*g, {{Rational(0), pi.rows()}});
}

// Infinitesimal invariance of a quantised family under the stabiliser.
bool stabiliser_invariant(const AlgebraPtr& g, const Functional& mu,
                          const std::vector<PBWElement>& elems) {
  const Subspace stab = stabiliser(*g, mu);
  for (const auto& row : stab.basis) {
    PBWElement xi(g);
    for (uint32_t i = 0; i < g->dim(); ++i)
      if (!is_zero(row[i]))
        xi = xi + PBWElement::generator(g, i).scaled(row[i]);
    for (const auto& e : elems)
      if (!u_commutator(xi, e).is_zero()) return false;
  }
  return true;
}

void check_commute(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Functional mu =
      parse_functional(g, c.value("mu", std::string("zero")), seed);
  const GeneratorFamily fam =
      a_mu_generators(g, mu, kind_from_string(c.value("kind", std::string())));
  const CommuteReport rep = pairwise_commutator_check(fam.elements);
  std::ostringstream os;
  os << fam.elements.size() << " generators, " << rep.pairs_checked
     << " pairs";
  if (!rep.ok()) {
    for (const auto& [i, j] : rep.failures)
      os << "; [" << fam.names[i] << "," << fam.names[j] << "] != 0";
    row.pass = false;
  } else if (fam.elements.empty()) {
    os << "; empty family";
    row.pass = false;
  } else if (!stabiliser_invariant(g, mu, fam.elements)) {
    os << "; family not stabiliser-invariant";
    row.pass = false;
  } else {
    row.pass = true;
  }
  row.detail = os.str();
}

void check_graded(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Functional mu =
      parse_functional(g, c.value("mu", std::string("zero")), seed);
  const auto rep = graded_image_check(
      g, mu, c.value("max_degree", std::size_t{4}),
      kind_from_string(c.value("kind", std::string())));
  row.pass = rep.two_sided_equal();
  std::ostringstream os;
  for (const auto& r : rep.rows)
    os << "deg " << r.degree << ": " << r.mf_dim << "/" << r.gr_dim
       << (r.mf_inside_gr && r.gr_inside_mf ? " ok; " : " MISMATCH; ");
  row.detail = os.str();
}

void check_diagram(const ojson& c, uint64_t, LedgerRow& row) {
  std::vector<LabelledJordanBlock> blocks;
  for (const auto& b : c.at("jordan"))
    blocks.push_back({b.at("ev").get<std::string>(),
                      partition_from_json(b.at("sizes"))});
  const DiagramReport rep =
      diagram_from_jordan(c.at("type").get<std::string>()[0], blocks);
  const std::string got = diagram_report_json(rep);
  const std::string expect = c.at("expect").get<std::string>();
  row.pass = got == expect;
  row.detail = row.pass ? got : "got " + got + " expected " + expect;
}

void check_free_count(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Partition pi = partition_from_json(c.at("partition"));
  const Functional gamma = nilpotent_from_partition(g, pi);
  const MFFamily fam = mf_family(g, standard_invariants(*g), gamma);
  const std::size_t expected = expected_generator_count(*g, gamma);
  const SkewGeneratorSet cells =
      g->family() == AlgebraFamily::GL
          ? generator_set_A(g->matrix_size(), pi)
          : generator_set_C(g->matrix_size() / 2, pi);
  const std::size_t witness =
      independence_witness(fam.polys(), c.value("trials", std::size_t{4}),
                           seed + 1);
  row.pass = fam.generators.size() == expected &&
             cells.cells.size() == expected && witness == expected;
  std::ostringstream os;
  os << pi.str() << ": generators " << fam.generators.size() << ", cells "
     << cells.cells.size() << ", witness " << witness << ", expected "
     << expected;
  row.detail = os.str();
}

void check_degree_law(const ojson& c, uint64_t, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Partition pi = partition_from_json(c.at("partition"));
  const Functional gamma = nilpotent_from_partition(g, pi);
  const auto invariants = standard_invariants(*g);
  const auto rep = degrees_top(g, invariants, gamma);
  const Subspace stab = stabiliser(*g, gamma);
  const AlgebraPtr q = restrict_to(g, stab);
  bool members = true;
  for (const auto& h : invariants) {
    const auto [top, order] = top_shift_component(h, gamma);
    if (!to_subalgebra_coords(*g, q, top) || !is_invariant(*g, top, stab))
      members = false;
  }
  row.pass = rep.good_system && members;
  std::ostringstream os;
  os << pi.str() << ": sum deg " << rep.total << " vs b(q) "
     << rat_str(rep.b_q_gamma) << (members ? "" : "; top component escapes");
  row.detail = os.str();
}

void check_vinberg(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Partition pi = partition_from_json(c.at("partition"));
  const Functional gamma = nilpotent_from_partition(g, pi);
  const Functional mu =
      parse_functional(g, c.value("mu", std::string("randreg")), seed);
  const VinbergFamily fam = vinberg_limit_family(g, gamma, mu);
  std::vector<PBWElement> quantised;
  for (const auto& e : fam.entries) quantised.push_back(symmetrise(g, e.poly));
  const CommuteReport rep = pairwise_commutator_check(quantised);
  const std::size_t witness =
      independence_witness(fam.polys(), c.value("trials", std::size_t{4}),
                           seed + 1);
  const Rational b = b_of(g->dim(), static_cast<std::size_t>(g->rank()));
  row.pass = rep.ok() && Rational(static_cast<long>(witness)) == b;
  std::ostringstream os;
  os << pi.str() << ": " << fam.entries.size() << " limit elements, witness "
     << witness << ", b(g) " << rat_str(b)
     << (rep.ok() ? "" : ", commutator failure");
  row.detail = os.str();
}

void check_gt(const ojson& c, uint64_t seed, LedgerRow& row) {
  const bool sp = c.at("check") == "gt-sp";
  const std::size_t n = c.at("n").get<std::size_t>();
  const GTFamily gt = sp ? gt_sp(n) : gt_gl(n);
  const CommuteReport rep = pairwise_commutator_check(gt.generators);
  std::vector<CPoly> symbols;
  for (const auto& e : gt.generators) symbols.push_back(symbol(e));
  const std::size_t witness = independence_witness(symbols, 4, seed + 2);
  const Rational b =
      b_of(gt.algebra->dim(), static_cast<std::size_t>(gt.algebra->rank()));
  bool det_difference = true;
  if (sp && n == 2) {
    // The degree-3 chain generator must equal the symmetrised-minor
    // difference Det(rows/cols 2..4) - Det(rows/cols 1..3) verbatim.
    const auto mat = generator_matrix(gt.algebra);
    const PBWElement zero(gt.algebra);
    const PBWElement one = PBWElement::constant(gt.algebra, Rational(1));
    AlgMatrix<PBWElement> lower(3, std::vector<PBWElement>(3, zero));
    AlgMatrix<PBWElement> upper(3, std::vector<PBWElement>(3, zero));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b2 = 0; b2 < 3; ++b2) {
        lower[a][b2] = mat[a + 1][b2 + 1];
        upper[a][b2] = mat[a][b2];
      }
    const PBWElement expect =
        det_sym(lower, 3, zero, one) - det_sym(upper, 3, zero, one);
    det_difference = false;
    for (const auto& e : gt.generators)
      if (e == expect) det_difference = true;
  }
  row.pass = rep.ok() && Rational(static_cast<long>(witness)) == b &&
             det_difference;
  std::ostringstream os;
  os << gt.generators.size() << " generators, witness " << witness << ", b(g) "
     << rat_str(b) << (rep.ok() ? "" : ", commutator failure")
     << (det_difference ? "" : ", minor-difference generator missing");
  row.detail = os.str();
}

void check_centraliser(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.at("algebra"));
  const Partition pi = partition_from_json(c.at("partition"));
  const Functional gamma = nilpotent_from_partition(g, pi);
  const std::size_t rounds = c.value("rounds", std::size_t{3});
  Sampler smp(seed + 3);
  std::ostringstream os;
  row.pass = true;
  for (std::size_t t = 0; t < rounds; ++t) {
    const Subspace stab = stabiliser(*g, gamma);
    const QVector nu = smp.vector(stab.dim());
    const CentraliserQuantisation cq = centraliser_quantisation(g, gamma, nu);
    const CommuteReport rep = pairwise_commutator_check(cq.elements);
    if (!rep.ok()) row.pass = false;
    os << "round " << t << ": " << cq.elements.size() << " elements over dim-"
       << cq.centraliser->dim() << " centraliser"
       << (rep.ok() ? "; " : " FAIL; ");
  }
  row.detail = os.str();
}

ContextPtr generic_context(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("m" + std::to_string(i));
  return make_context(std::move(names), nvars);
}

void check_oracle_matrix(const ojson& c, uint64_t, LedgerRow& row) {
  std::ostringstream os;
  row.pass = true;
  const auto fail = [&](const std::string& what) {
    row.pass = false;
    os << what << " MISMATCH; ";
  };
  const std::size_t max_n = c.value("max_n", std::size_t{5});
  for (std::size_t N = 1; N <= max_n; ++N) {
    const auto ctx = generic_context(N * N);
    AlgMatrix<CPoly> m(N, std::vector<CPoly>(N, CPoly(ctx)));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        m[i][j] = CPoly::variable(ctx, static_cast<uint32_t>(i * N + j));
    const CPoly zero(ctx), one(ctx, Rational(1));
    for (std::size_t k = 1; k <= N; ++k) {
      if (det_sym(m, k, zero, one) != oracle::classical_minor_sum(m, k))
        fail("det N=" + std::to_string(N) + " m=" + std::to_string(k));
      if (per_sym(m, k, zero, one) != oracle::classical_permanent_sum(m, k))
        fail("per N=" + std::to_string(N) + " m=" + std::to_string(k));
    }
  }
  // Pfaffians of generic skew matrices, primed-column convention.
  for (std::size_t n : {1u, 2u, 3u}) {
    const std::size_t N = 2 * n;
    const auto ctx = generic_context(N * N);
    AlgMatrix<CPoly> skew(N, std::vector<CPoly>(N, CPoly(ctx)));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        skew[i][j] = CPoly::variable(ctx, static_cast<uint32_t>(i * N + j));
        skew[j][i] = -skew[i][j];
      }
    AlgMatrix<CPoly> primed(N, std::vector<CPoly>(N, CPoly(ctx)));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) primed[i][j] = skew[i][N - 1 - j];
    if (pfaffian_sym(primed, CPoly(ctx), CPoly(ctx, Rational(1))) !=
        oracle::classical_pfaffian(skew))
      fail("pf n=" + std::to_string(n));
  }
  if (row.pass) os << "det/per N<=" << max_n << ", pf n<=3 all agree";
  row.detail = os.str();
}

void check_oracle_symbol(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.value("algebra", std::string("gl2")));
  Sampler smp(seed + 4);
  const std::size_t rounds = c.value("rounds", std::size_t{30});
  row.pass = true;
  for (std::size_t t = 0; t < rounds; ++t) {
    const unsigned deg = 1 + static_cast<unsigned>(smp.int_in(0, 5));
    // Random homogeneous polynomial of the chosen degree.
    CPoly p(g->context());
    for (int terms = 0; terms < 5; ++terms) {
      Monomial m;
      for (unsigned d = 0; d < deg; ++d)
        m = m * Monomial::variable(
                    static_cast<uint32_t>(smp.int_in(0, g->dim() - 1)));
      p.add_term(m, smp.rational());
    }
    if (p.is_zero()) continue;
    if (symbol(symmetrise(g, p)) != p) {
      row.pass = false;
      row.detail = "gr(varpi(p)) != p at round " + std::to_string(t);
      return;
    }
  }
  row.detail = std::to_string(rounds) + " homogeneous samples, degree <= 6";
}

void check_oracle_poisson(const ojson& c, uint64_t seed, LedgerRow& row) {
  const AlgebraPtr g = algebra_from_name(c.value("algebra", std::string("gl2")));
  Sampler smp(seed + 5);
  const std::size_t rounds = c.value("rounds", std::size_t{50});
  const auto random_poly = [&] {
    CPoly p(g->context());
    for (int terms = 0; terms < 4; ++terms) {
      Monomial m;
      const int deg = static_cast<int>(smp.int_in(0, 3));
      for (int d = 0; d < deg; ++d)
        m = m * Monomial::variable(
                    static_cast<uint32_t>(smp.int_in(0, g->dim() - 1)));
      p.add_term(m, smp.rational(-4, 4));
    }
    return p;
  };
  row.pass = true;
  for (std::size_t t = 0; t < rounds; ++t) {
    const CPoly a = random_poly(), b = random_poly(), c2 = random_poly();
    const CPoly jac = poisson_bracket(*g, a, poisson_bracket(*g, b, c2)) +
                      poisson_bracket(*g, b, poisson_bracket(*g, c2, a)) +
                      poisson_bracket(*g, c2, poisson_bracket(*g, a, b));
    const CPoly leib = poisson_bracket(*g, a, b * c2) -
                       poisson_bracket(*g, a, b) * c2 -
                       b * poisson_bracket(*g, a, c2);
    if (!jac.is_zero() || !leib.is_zero()) {
      row.pass = false;
      row.detail = "Jacobi/Leibniz failure at round " + std::to_string(t);
      return;
    }
  }
  row.detail = std::to_string(rounds) + " random triples, degree <= 3";
}

void check_fault(const ojson&, uint64_t, LedgerRow& row) {
  // A deliberately corrupted bracket table must be rejected up front.
  std::vector<SparseVec> table(3 * 3);
  table[0 * 3 + 1] = {{2u, Rational(1)}};
  table[0 * 3 + 2] = {{0u, Rational(1)}};   // corrupt: breaks Jacobi
  table[1 * 3 + 2] = {{1u, Rational(-2)}};
  try {
    build_from_table({"a", "b", "c"}, std::move(table), -1);
    row.pass = false;
    row.detail = "corrupted table was accepted";
  } catch (const std::exception&) {
    row.pass = true;
    row.detail = "corrupted structure constants rejected";
  }
}

void run_case(const ojson& c, uint64_t seed, LedgerRow& row) {
  const std::string check = c.at("check").get<std::string>();
  if (check == "commute") return check_commute(c, seed, row);
  if (check == "graded") return check_graded(c, seed, row);
  if (check == "diagram") return check_diagram(c, seed, row);
  if (check == "free-count") return check_free_count(c, seed, row);
  if (check == "degree-law") return check_degree_law(c, seed, row);
  if (check == "vinberg") return check_vinberg(c, seed, row);
  if (check == "gt-gl" || check == "gt-sp") return check_gt(c, seed, row);
  if (check == "centraliser") return check_centraliser(c, seed, row);
  if (check == "oracle-matrix") return check_oracle_matrix(c, seed, row);
  if (check == "oracle-symbol") return check_oracle_symbol(c, seed, row);
  if (check == "oracle-poisson") return check_oracle_poisson(c, seed, row);
  if (check == "fault") return check_fault(c, seed, row);
  throw std::invalid_argument("battery: unknown check '" + check + "'");
}

}  // namespace

Ledger run_battery(const std::string& config_json, unsigned jobs,
                   uint64_t seed) {
  const ojson config = ojson::parse(config_json);
  const auto& cases = config.at("cases");
  Ledger ledger;
  ledger.rows.resize(cases.size());
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= cases.size()) return;
      const ojson& c = cases.at(idx);
      LedgerRow& row = ledger.rows[idx];
      row.id = c.value("id", "case-" + std::to_string(idx));
      row.claim = c.value("claim", std::string("unspecified"));
      const uint64_t case_seed = c.value("seed", seed);
      const auto start = std::chrono::steady_clock::now();
      try {
        run_case(c, case_seed, row);
      } catch (const std::exception& ex) {
        row.pass = false;
        row.detail = std::string("exception: ") + ex.what();
      }
      row.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return ledger;
}

std::string ledger_to_json(const Ledger& ledger) {
  ojson rows = ojson::array();
  for (const auto& r : ledger.rows) {
    ojson row;
    row["id"] = r.id;
    row["claim"] = r.claim;
    row["status"] = r.pass ? "pass" : "fail";
    row["ms"] = r.millis;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  ojson out;
  out["rows"] = std::move(rows);
  out["all_pass"] = ledger.all_pass();
  return out.dump(2);
}

std::string ledger_to_table(const Ledger& ledger) {
  std::ostringstream os;
  for (const auto& r : ledger.rows) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
    os << "  [" << r.claim << "]";
    os << "  (" << static_cast<long>(r.millis) << " ms)";
    if (!r.pass) os << "\n      " << r.detail;
    os << "\n";
  }
  os << (ledger.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

std::string default_battery_config() {
  ojson cases = ojson::array();
  const auto add = [&](ojson c) { cases.push_back(std::move(c)); };

  // Commutativity in type A, both generator families, every Jordan shape.
  const std::vector<std::pair<std::string, std::vector<std::string>>> gl_mus =
      {{"gl2", {"diag:1,2", "nilpotent:2", "scalar:1", "zero"}},
       {"gl3",
        {"diag:1,2,3", "nilpotent:2,1", "nilpotent:3", "scalar:1", "zero"}}};
  for (const auto& [alg, mus] : gl_mus)
    for (const auto& mu : mus)
      for (const std::string kind : {"det", "per"})
        add({{"id", "commute-" + alg + "-" + kind + "-" + mu},
             {"claim", "commutativity-type-A"},
             {"check", "commute"},
             {"algebra", alg},
             {"mu", mu},
             {"kind", kind}});

  for (const std::string mu : {"diag:1,2", "nilpotent:2,2", "zero"})
    add({{"id", "commute-sp4-det-" + mu},
         {"claim", "commutativity-type-C"},
         {"check", "commute"},
         {"algebra", "sp4"},
         {"mu", mu}});

  for (const std::string alg : {"o3", "o5", "o4"}) {
    for (const std::string mu : {"rand", "zero"})
      add({{"id", "commute-" + alg + "-" + mu},
           {"claim", "commutativity-types-BD"},
           {"check", "commute"},
           {"algebra", alg},
           {"mu", mu}});
  }

  for (const std::string mu : {"diag:1,2", "nilpotent:2", "scalar:1", "zero"})
    add({{"id", "graded-gl2-" + mu},
         {"claim", "graded-equality"},
         {"check", "graded"},
         {"algebra", "gl2"},
         {"mu", mu},
         {"max_degree", 4}});
  add({{"id", "graded-sp4-nilpotent"},
       {"claim", "graded-equality"},
       {"check", "graded"},
       {"algebra", "sp4"},
       {"mu", "nilpotent:2,2"},
       {"max_degree", 4}});

  add({{"id", "diagram-sp10"},
       {"claim", "diagram-golden-sp10"},
       {"check", "diagram"},
       {"type", "C"},
       {"jordan",
        ojson::array({{{"ev", "0"}, {"sizes", {1, 1}}},
                      {{"ev", "l"}, {"sizes", {2, 1, 1}}},
                      {{"ev", "-l"}, {"sizes", {2, 1, 1}}}})},
       {"expect",
        std::string(R"({"Pi":[5,3,2],"Pi_gamma":[4,4,2],"r":{"2":1,"4":1,)") +
            R"("6":2,"8":2,"10":3},"sigma":[2,1,1,0,0],"cells":[[10,7],[10,6)" +
            R"(],[10,5],[10,4],[10,3],[10,2],[10,1],[10,0],[8,6],[8,5],[8,4)" +
            R"(],[8,3],[8,2],[8,1],[8,0],[6,4],[6,3],[6,2],[6,1],[6,0],[4,3)" +
            R"(],[4,2],[4,1],[4,0],[2,1],[2,0]],"excluded":[[10,9],[10,8],[)" +
            R"(8,7],[6,5]]})"}});

  for (std::size_t N = 2; N <= 4; ++N)
    for (const auto& pi : all_partitions(N)) {
      ojson rows = ojson::array();
      for (auto r : pi.rows()) rows.push_back(r);
      add({{"id", "free-count-gl" + std::to_string(N) + "-" + pi.str()},
           {"claim", "free-generation-count"},
           {"check", "free-count"},
           {"algebra", "gl" + std::to_string(N)},
           {"partition", rows}});
      add({{"id", "degree-law-gl" + std::to_string(N) + "-" + pi.str()},
           {"claim", "top-degree-law"},
           {"check", "degree-law"},
           {"algebra", "gl" + std::to_string(N)},
           {"partition", rows}});
    }
  for (const auto& pi : symplectic_partitions(4)) {
    ojson rows = ojson::array();
    for (auto r : pi.rows()) rows.push_back(r);
    add({{"id", "free-count-sp4-" + pi.str()},
         {"claim", "free-generation-count"},
         {"check", "free-count"},
         {"algebra", "sp4"},
         {"partition", rows}});
    add({{"id", "degree-law-sp4-" + pi.str()},
         {"claim", "top-degree-law"},
         {"check", "degree-law"},
         {"algebra", "sp4"},
         {"partition", rows}});
  }

  add({{"id", "vinberg-gl2-(2)"},
       {"claim", "vinberg-limit"},
       {"check", "vinberg"},
       {"algebra", "gl2"},
       {"partition", {2}},
       {"mu", "randreg"}});
  add({{"id", "vinberg-gl3-(2,1)"},
       {"claim", "vinberg-limit"},
       {"check", "vinberg"},
       {"algebra", "gl3"},
       {"partition", {2, 1}},
       {"mu", "randreg"}});
  add({{"id", "vinberg-gl3-(3)"},
       {"claim", "vinberg-limit"},
       {"check", "vinberg"},
       {"algebra", "gl3"},
       {"partition", {3}},
       {"mu", "randreg"}});

  add({{"id", "gt-gl3"},
       {"claim", "gelfand-tsetlin"},
       {"check", "gt-gl"},
       {"n", 3}});
  add({{"id", "gt-sp2"},
       {"claim", "gelfand-tsetlin"},
       {"check", "gt-sp"},
       {"n", 2}});

  add({{"id", "centraliser-gl3-(2,1)"},
       {"claim", "centraliser-quantisation"},
       {"check", "centraliser"},
       {"algebra", "gl3"},
       {"partition", {2, 1}},
       {"rounds", 3}});

  add({{"id", "oracle-det-per-pf"},
       {"claim", "oracle-equivalence"},
       {"check", "oracle-matrix"},
       {"max_n", 5}});
  add({{"id", "oracle-symmetrise-symbol"},
       {"claim", "oracle-equivalence"},
       {"check", "oracle-symbol"},
       {"rounds", 30}});
  add({{"id", "oracle-poisson-axioms"},
       {"claim", "oracle-equivalence"},
       {"check", "oracle-poisson"},
       {"rounds", 50}});
  add({{"id", "fault-injection"},
       {"claim", "structure-validation"},
       {"check", "fault"}});

  ojson config;
  config["cases"] = std::move(cases);
  return config.dump();
}

}  // namespace shiftarg
