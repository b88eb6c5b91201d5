#include "shiftarg/json_io.hpp"

#include <cctype>

#include <json.hpp>

#include "shiftarg/random.hpp"

namespace shiftarg {

using ojson = nlohmann::ordered_json;

std::string poly_to_json(const CPoly& p) {
  ojson out;
  out["context"] = p.context()->names();
  ojson terms = ojson::array();
  for (const auto& [m, c] : p.terms()) {
    ojson term;
    term["coeff"] = rat_str(c);
    ojson exps = ojson::object();
    for (const auto& [i, e] : m.exps()) exps[std::to_string(i)] = e;
    term["exps"] = std::move(exps);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out.dump();
}

CPoly poly_from_json(const std::string& text) {
  const ojson in = ojson::parse(text);
  std::vector<std::string> names = in.at("context");
  std::size_t lie = names.size();
  while (lie > 0 && (names[lie - 1] == "u" || names[lie - 1] == "zinv")) --lie;
  CPoly p(make_context(std::move(names), lie));
  for (const auto& term : in.at("terms")) {
    std::vector<std::pair<uint32_t, uint32_t>> exps;
    for (const auto& [key, val] : term.at("exps").items())
      exps.emplace_back(static_cast<uint32_t>(std::stoul(key)),
                        val.get<uint32_t>());
    p.add_term(Monomial(std::move(exps)),
               rat_parse(term.at("coeff").get<std::string>()));
  }
  return p;
}

std::string pbw_to_json(const PBWElement& e) {
  ojson out;
  ojson words = ojson::array();
  for (const auto& [w, c] : e.terms()) {
    ojson entry;
    entry["idx"] = w;
    entry["coeff"] = rat_str(c);
    words.push_back(std::move(entry));
  }
  out["words"] = std::move(words);
  return out.dump();
}

std::string algebra_descriptor_json(const LieAlgebra& g) {
  ojson out;
  switch (g.family()) {
    case AlgebraFamily::GL: out["family"] = "gl"; break;
    case AlgebraFamily::O: out["family"] = "o"; break;
    case AlgebraFamily::SP: out["family"] = "sp"; break;
    default: out["family"] = "subalgebra"; break;
  }
  out["n"] = g.matrix_size();
  out["dim"] = g.dim();
  out["rank"] = g.rank();
  out["basis"] = g.labels();
  return out.dump();
}

std::string functional_to_json(const LieAlgebra& g, const Functional& f) {
  const QMatrix a = functional_matrix(g, f);
  ojson rows = ojson::array();
  for (const auto& row : a) {
    ojson r = ojson::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    rows.push_back(std::move(r));
  }
  ojson out;
  out["matrix"] = std::move(rows);
  return out.dump();
}

std::string diagram_report_json(const DiagramReport& rep) {
  ojson out;
  out["Pi"] = rep.pi.rows();
  out["Pi_gamma"] = rep.pi_gamma.rows();
  ojson r = ojson::object();
  for (const auto& [m, row] : rep.r) r[std::to_string(m)] = row;
  out["r"] = std::move(r);
  out["sigma"] = rep.sigma;
  ojson cells = ojson::array();
  for (const auto& [m, k] : rep.cells.cells) cells.push_back(ojson{m, k});
  out["cells"] = std::move(cells);
  ojson excluded = ojson::array();
  for (const auto& [m, k] : rep.cells.excluded) excluded.push_back(ojson{m, k});
  out["excluded"] = std::move(excluded);
  return out.dump();
}

AlgebraPtr algebra_from_name(const std::string& name) {
  std::size_t pos = 0;
  while (pos < name.size() && !std::isdigit(static_cast<unsigned char>(name[pos])))
    ++pos;
  const std::string fam = name.substr(0, pos);
  if (pos == name.size())
    throw std::invalid_argument("algebra: missing size in '" + name + "'");
  const std::size_t n = std::stoul(name.substr(pos));
  if (fam == "gl") return build_gl(n);
  if (fam == "sp") {
    if (n % 2 != 0)
      throw std::invalid_argument("algebra: sp size must be even");
    return build_classical(ClassicalType::C, n / 2);
  }
  if (fam == "o") {
    if (n % 2 == 1) return build_classical(ClassicalType::B, n / 2);
    return build_classical(ClassicalType::D, n / 2);
  }
  throw std::invalid_argument("algebra: unknown family '" + fam + "'");
}

namespace {

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(rat_parse(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

Functional random_element_functional(const AlgebraPtr& g, long lo, long hi,
                                     uint64_t seed) {
  Sampler smp(seed);
  QVector coords = smp.vector(g->dim(), lo, hi);
  return functional_from_matrix(*g, g->element_matrix(coords));
}

}  // namespace

Functional parse_functional(const AlgebraPtr& g, const std::string& spec,
                            uint64_t seed) {
  const std::size_t N = g->matrix_size();
  if (spec.empty() || spec == "zero")
    return functional_from_matrix(*g, q_zero(N, N));
  if (spec.front() == '{') {
    const ojson in = ojson::parse(spec);
    QMatrix a = q_zero(N, N);
    const auto& rows = in.at("matrix");
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const auto& cell = rows.at(i).at(j);
        a[i][j] = cell.is_string() ? rat_parse(cell.get<std::string>())
                                   : Rational(cell.get<long>());
      }
    return functional_from_matrix(*g, std::move(a));
  }
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "scalar") {
    if (g->family() != AlgebraFamily::GL)
      throw std::invalid_argument("functional: scalar requires gl");
    const Rational c = tail.empty() ? Rational(1) : rat_parse(tail);
    QMatrix a = q_zero(N, N);
    for (std::size_t i = 0; i < N; ++i) a[i][i] = c;
    return functional_from_matrix(*g, std::move(a));
  }
  if (head == "diag") {
    const auto vals = parse_rational_list(tail);
    QMatrix a = q_zero(N, N);
    if (g->family() == AlgebraFamily::GL) {
      if (vals.size() != N)
        throw std::invalid_argument("functional: diag needs N entries");
      for (std::size_t i = 0; i < N; ++i) a[i][i] = vals[i];
    } else if (g->family() == AlgebraFamily::SP) {
      if (vals.size() != N / 2)
        throw std::invalid_argument("functional: diag needs n entries for sp");
      for (std::size_t i = 0; i < N / 2; ++i) {
        a[i][i] = vals[i];
        a[N - 1 - i][N - 1 - i] = -vals[i];
      }
    } else {
      throw std::invalid_argument("functional: no diagonal elements in o_N");
    }
    return functional_from_matrix(*g, std::move(a));
  }
  if (head == "nilpotent") {
    std::vector<std::size_t> rows;
    for (const auto& r : parse_rational_list(tail))
      rows.push_back(static_cast<std::size_t>(r.get_num().get_si()));
    return jordan_to_functional(*g, {{Rational(0), rows}});
  }
  if (head == "rand" || head == "randreg") {
    long lo = -10, hi = 10;
    if (!tail.empty()) {
      const auto vals = parse_rational_list(tail);
      lo = vals.at(0).get_num().get_si();
      hi = vals.at(1).get_num().get_si();
    }
    Functional f = random_element_functional(g, lo, hi, seed);
    if (head == "randreg") {
      uint64_t s = seed;
      while (g->rank() >= 0 &&
             stabiliser(*g, f).dim() != static_cast<std::size_t>(g->rank()))
        f = random_element_functional(g, lo, hi, ++s);
    }
    return f;
  }
  throw std::invalid_argument("functional: cannot parse '" + spec + "'");
}

}  // namespace shiftarg
