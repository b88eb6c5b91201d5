#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include "shiftarg/diagram.hpp"
#include "shiftarg/json_io.hpp"
#include "shiftarg/limits_gt.hpp"
#include "shiftarg/matrix_invariants.hpp"
#include "shiftarg/quantise.hpp"
#include "shiftarg/random.hpp"
#include "shiftarg/verifier.hpp"

using namespace shiftarg;
using ojson = nlohmann::ordered_json;

namespace {

uint64_t default_seed() {
  if (const char* env = std::getenv("SHIFTARG_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

struct Options {
  std::string algebra;
  std::string mu = "zero";
  std::string gamma = "zero";
  std::string check = "commute";
  std::string kind;
  std::string gt_type = "gl";
  std::string jordan;
  std::string diagram_type = "A";
  std::string config;
  std::size_t n = 2;
  std::size_t max_degree = 3;
  std::size_t trials = 8;
  uint64_t seed = default_seed();
  unsigned jobs = 1;
  bool json = false;
  bool verify = false;
};

int run_algebra(const Options& opt) {
  const AlgebraPtr g = algebra_from_name(opt.algebra);
  std::cout << algebra_descriptor_json(*g) << "\n";
  return 0;
}

int run_mf(const Options& opt) {
  const AlgebraPtr g = algebra_from_name(opt.algebra);
  const Functional gamma = parse_functional(g, opt.gamma, opt.seed);
  const auto invariants = standard_invariants(*g);
  const MFFamily fam = mf_family(g, invariants, gamma);
  const CommuteReport commute =
      pairwise_poisson_check(*g, fam.polys(), opt.jobs);
  const TopDegreeReport degrees = degrees_top(g, invariants, gamma);
  ojson rep;
  rep["pairs_checked"] = commute.pairs_checked;
  rep["failures"] = ojson::array();
  for (const auto& [i, j] : commute.failures)
    rep["failures"].push_back(ojson{i, j});
  rep["degrees"] = degrees.degrees;
  rep["b_q_gamma"] = rat_str(degrees.b_q_gamma);
  rep["generators"] = fam.generators.size();
  rep["good_system"] = degrees.good_system;
  std::cout << rep.dump(opt.json ? -1 : 2) << "\n";
  return commute.ok() ? 0 : 1;
}

int run_quantize(const Options& opt) {
  const AlgebraPtr g = algebra_from_name(opt.algebra);
  const Functional mu = parse_functional(g, opt.mu, opt.seed);
  const GeneratorKind kind = opt.kind == "det"   ? GeneratorKind::Det
                             : opt.kind == "per" ? GeneratorKind::Per
                                                 : GeneratorKind::Default;
  if (opt.check == "commute") {
    const GeneratorFamily fam = a_mu_generators(g, mu, kind);
    const CommuteReport rep = pairwise_commutator_check(fam.elements, opt.jobs);
    ojson out;
    out["generators"] = fam.names;
    out["dropped"] = fam.dropped;
    out["pairs_checked"] = rep.pairs_checked;
    out["failures"] = ojson::array();
    for (const auto& [i, j] : rep.failures)
      out["failures"].push_back(ojson{fam.names[i], fam.names[j]});
    std::cout << out.dump(opt.json ? -1 : 2) << "\n";
    return rep.ok() ? 0 : 1;
  }
  if (opt.check == "graded") {
    const auto rep = graded_image_check(g, mu, opt.max_degree, kind);
    ojson out;
    for (const auto& r : rep.rows)
      out["degrees"].push_back(ojson{{"degree", r.degree},
                                     {"shift_dim", r.mf_dim},
                                     {"graded_dim", r.gr_dim},
                                     {"equal", r.mf_inside_gr && r.gr_inside_mf}});
    out["two_sided_equal"] = rep.two_sided_equal();
    std::cout << out.dump(opt.json ? -1 : 2) << "\n";
    return rep.two_sided_equal() ? 0 : 1;
  }
  if (opt.check == "independence") {
    const MFFamily fam = mf_family(g, standard_invariants(*g), mu);
    const std::size_t witness =
        independence_witness(fam.polys(), opt.trials, opt.seed);
    const std::size_t expected = expected_generator_count(*g, mu);
    ojson out;
    out["witness"] = witness;
    out["expected"] = expected;
    out["generators"] = fam.generators.size();
    std::cout << out.dump(opt.json ? -1 : 2) << "\n";
    return witness == expected ? 0 : 1;
  }
  std::cerr << "unknown --check '" << opt.check << "'\n";
  return 2;
}

int run_gt(const Options& opt) {
  const GTFamily gt = opt.gt_type == "sp" ? gt_sp(opt.n) : gt_gl(opt.n);
  ojson out;
  out["generators"] = gt.names;
  int rc = 0;
  if (opt.verify) {
    const CommuteReport rep = pairwise_commutator_check(gt.generators, opt.jobs);
    std::vector<CPoly> symbols;
    for (const auto& e : gt.generators) symbols.push_back(symbol(e));
    const std::size_t witness =
        independence_witness(symbols, opt.trials, opt.seed);
    out["pairs_checked"] = rep.pairs_checked;
    out["commutative"] = rep.ok();
    out["independence_witness"] = witness;
    out["b"] = rat_str(
        b_of(gt.algebra->dim(), static_cast<std::size_t>(gt.algebra->rank())));
    rc = rep.ok() &&
                 Rational(static_cast<long>(witness)) ==
                     b_of(gt.algebra->dim(),
                          static_cast<std::size_t>(gt.algebra->rank()))
             ? 0
             : 1;
  }
  if (opt.gt_type == "sp") {
    // Print the degree-3 chain generator (the symmetrised-minor difference).
    for (std::size_t i = 0; i < gt.names.size(); ++i)
      if (gt.names[i].rfind("dPhi", 0) == 0 &&
          gt.generators[i].degree() == 3) {
        out["minor_difference"] = ojson::parse(pbw_to_json(gt.generators[i]));
        break;
      }
  }
  std::cout << out.dump(opt.json ? -1 : 2) << "\n";
  return rc;
}

int run_limit(const Options& opt) {
  const AlgebraPtr g = algebra_from_name(opt.algebra);
  const Functional gamma = parse_functional(g, opt.gamma, opt.seed);
  const Functional mu = parse_functional(g, opt.mu, opt.seed + 1);
  const VinbergFamily fam = vinberg_limit_family(g, gamma, mu);
  std::vector<PBWElement> quantised;
  for (const auto& e : fam.entries) quantised.push_back(symmetrise(g, e.poly));
  const CommuteReport rep = pairwise_commutator_check(quantised, opt.jobs);
  const std::size_t witness =
      independence_witness(fam.polys(), opt.trials, opt.seed + 2);
  ojson out;
  out["family_size"] = fam.entries.size();
  out["pairs_checked"] = rep.pairs_checked;
  out["commutative"] = rep.ok();
  out["independence_witness"] = witness;
  out["b"] =
      rat_str(b_of(g->dim(), static_cast<std::size_t>(g->rank())));
  std::cout << out.dump(opt.json ? -1 : 2) << "\n";
  const bool ok = rep.ok() && Rational(static_cast<long>(witness)) ==
                                  b_of(g->dim(),
                                       static_cast<std::size_t>(g->rank()));
  return ok ? 0 : 1;
}

int run_diagram(const Options& opt) {
  std::vector<LabelledJordanBlock> blocks;
  for (const auto& b : ojson::parse(opt.jordan)) {
    std::vector<std::size_t> sizes;
    for (const auto& s : b.at("sizes")) sizes.push_back(s.get<std::size_t>());
    blocks.push_back({b.at("ev").get<std::string>(), Partition(sizes)});
  }
  const DiagramReport rep = diagram_from_jordan(opt.diagram_type[0], blocks);
  std::cout << diagram_report_json(rep) << "\n";
  return 0;
}

int run_verify_all(const Options& opt) {
  std::string config = default_battery_config();
  if (!opt.config.empty()) {
    std::ifstream in(opt.config);
    if (!in) {
      std::cerr << "cannot open config " << opt.config << "\n";
      return 2;
    }
    config.assign(std::istreambuf_iterator<char>(in),
                  std::istreambuf_iterator<char>());
  }
  const Ledger ledger = run_battery(config, opt.jobs, opt.seed);
  if (opt.json)
    std::cout << ledger_to_json(ledger) << "\n";
  else
    std::cout << ledger_to_table(ledger);
  return ledger.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shift-of-argument subalgebras, their quantisations, "
               "and limit constructions for classical Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--trials", opt.trials, "sample count for rank witnesses");
  app.add_option("--jobs", opt.jobs, "worker threads for pairwise checks");
  app.add_flag("--json", opt.json, "compact JSON output");

  auto* alg = app.add_subcommand("algebra", "print an algebra descriptor");
  alg->add_option("--algebra", opt.algebra, "gl<N>, o<N> or sp<2n>")
      ->required();

  auto* mf = app.add_subcommand("mf", "shift-of-argument family checks");
  mf->add_option("--algebra", opt.algebra)->required();
  mf->add_option("--gamma", opt.gamma, "functional shorthand or matrix JSON");

  auto* qz = app.add_subcommand("quantize", "quantised family checks");
  qz->add_option("--algebra", opt.algebra)->required();
  qz->add_option("--mu", opt.mu);
  qz->add_option("--check", opt.check, "commute | graded | independence");
  qz->add_option("--kind", opt.kind, "det | per (family override)");
  qz->add_option("--max-degree", opt.max_degree);

  auto* gt = app.add_subcommand("gt", "Gelfand-Tsetlin generator families");
  gt->add_option("--type", opt.gt_type, "gl | sp")->required();
  gt->add_option("--n", opt.n)->required();
  gt->add_flag("--verify", opt.verify, "run commutativity and rank checks");

  auto* lim = app.add_subcommand("limit", "nilpotent limit of the shift family");
  lim->add_option("--algebra", opt.algebra)->required();
  lim->add_option("--gamma", opt.gamma, "nilpotent functional")->required();
  lim->add_option("--mu", opt.mu, "regular direction")->required();

  auto* dia = app.add_subcommand("diagram", "induced-orbit combinatorics");
  dia->add_option("--type", opt.diagram_type, "A | C")->required();
  dia->add_option("--jordan", opt.jordan, "[{\"ev\":..,\"sizes\":[..]},..]")
      ->required();

  auto* ver = app.add_subcommand("verify-all", "run the verification battery");
  ver->add_option("--config", opt.config, "battery config JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (alg->parsed()) return run_algebra(opt);
    if (mf->parsed()) return run_mf(opt);
    if (qz->parsed()) return run_quantize(opt);
    if (gt->parsed()) return run_gt(opt);
    if (lim->parsed()) return run_limit(opt);
    if (dia->parsed()) return run_diagram(opt);
    if (ver->parsed()) return run_verify_all(opt);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
