#include "shiftarg/quantise.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "shiftarg/random.hpp"

namespace shiftarg {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

template <typename F>
std::vector<std::pair<std::size_t, std::size_t>> parallel_pair_failures(
    std::size_t n, unsigned jobs, F&& commutes) {
  const auto pairs = all_pairs(n);
  if (jobs <= 1 || pairs.size() < 4) {
    std::vector<std::pair<std::size_t, std::size_t>> failures;
    for (const auto& p : pairs)
      if (!commutes(p.first, p.second)) failures.push_back(p);
    return failures;
  }
  const unsigned workers =
      std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size()));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partial(
      workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t t = w; t < pairs.size(); t += workers)
        if (!commutes(pairs[t].first, pairs[t].second))
          partial[w].push_back(pairs[t]);
    });
  }
  for (auto& t : threads) t.join();
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  for (const auto& part : partial)
    failures.insert(failures.end(), part.begin(), part.end());
  std::sort(failures.begin(), failures.end());
  return failures;
}

}  // namespace

CommuteReport pairwise_commutator_check(const std::vector<PBWElement>& elems,
                                        unsigned jobs) {
  CommuteReport rep;
  rep.pairs_checked = elems.size() * (elems.size() - 1) / 2;
  rep.failures = parallel_pair_failures(
      elems.size(), jobs, [&](std::size_t i, std::size_t j) {
        return u_commutator(elems[i], elems[j]).is_zero();
      });
  return rep;
}

CommuteReport pairwise_poisson_check(const LieAlgebra& g,
                                     const std::vector<CPoly>& elems,
                                     unsigned jobs) {
  CommuteReport rep;
  rep.pairs_checked = elems.size() * (elems.size() - 1) / 2;
  rep.failures = parallel_pair_failures(
      elems.size(), jobs, [&](std::size_t i, std::size_t j) {
        return poisson_bracket(g, elems[i], elems[j]).is_zero();
      });
  return rep;
}

GeneratorFamily a_mu_generators(const AlgebraPtr& g, const Functional& mu,
                                GeneratorKind kind) {
  GeneratorFamily fam;
  fam.algebra = g;
  const std::size_t N = g->matrix_size();
  bool det = false, per = false, pf = false;
  switch (g->family()) {
    case AlgebraFamily::GL:
      det = kind != GeneratorKind::Per;
      per = kind == GeneratorKind::Per;
      break;
    case AlgebraFamily::SP:
      if (kind == GeneratorKind::Per)
        throw std::invalid_argument("a_mu_generators: no Per family in type C");
      det = true;
      break;
    case AlgebraFamily::O:
      if (kind == GeneratorKind::Det)
        throw std::invalid_argument("a_mu_generators: no Det family in types B/D");
      per = true;
      pf = N % 2 == 0;
      break;
    default:
      throw std::invalid_argument("a_mu_generators: unsupported family");
  }
  const std::size_t step = g->family() == AlgebraFamily::GL ? 1 : 2;
  std::size_t hi = N;
  if (pf) hi = N - 2;  // type D: Per family stops at 2n-2
  const auto emit = [&](const char* tag, std::size_t m,
                        std::vector<PBWElement> coeffs) {
    // coefficient k of z^{-m+k} is (1/k!) varpi(d_mu^k inv); rescale to the
    // plain shifts. Only k < m can be nonconstant; k = m is dropped.
    Rational kfact = 1;
    for (std::size_t k = 0; k + 1 <= m; ++k) {
      if (k > 0) kfact *= static_cast<long>(k);
      PBWElement e = coeffs[k].scaled(kfact);
      const std::string name = std::string(tag) + "[" + std::to_string(m) +
                               "," + std::to_string(k) + "]";
      if (e.is_zero())
        fam.dropped.push_back(name);
      else {
        fam.elements.push_back(std::move(e));
        fam.names.push_back(name);
      }
    }
  };
  if (det)
    for (std::size_t m = step; m <= N; m += step)
      emit("Phi", m, shift_poly_det_pbw(g, mu, m));
  if (per)
    for (std::size_t m = step; m <= hi; m += step)
      emit("Psi", m, shift_poly_per_pbw(g, mu, m));
  if (pf) {
    const auto coeffs = shift_poly_pf_pbw(g, mu);
    for (std::size_t k = 0; k + 1 <= N / 2; ++k) {
      const std::string name = "Pf[" + std::to_string(k) + "]";
      if (coeffs[k].is_zero())
        fam.dropped.push_back(name);
      else {
        fam.elements.push_back(coeffs[k]);
        fam.names.push_back(name);
      }
    }
  }
  return fam;
}

namespace {

// All multisets over `degrees` with total degree exactly d; calls sink with
// the multiplicity vector.
void multisets_of_degree(const std::vector<int64_t>& degrees, std::size_t from,
                         int64_t remaining, std::vector<unsigned>& counts,
                         const std::function<void(const std::vector<unsigned>&)>& sink) {
  if (remaining == 0) {
    sink(counts);
    return;
  }
  if (from == degrees.size()) return;
  const int64_t d = degrees[from];
  const unsigned max_count = d > 0 ? static_cast<unsigned>(remaining / d) : 0;
  for (unsigned c = 0; c <= max_count; ++c) {
    counts[from] = c;
    multisets_of_degree(degrees, from + 1, remaining - c * d, counts, sink);
  }
  counts[from] = 0;
}

// Row space of polynomials over the monomials that actually occur.
struct PolySpan {
  std::vector<Monomial> columns;
  QMatrix rows;  // RREF
};

PolySpan poly_span(const std::vector<CPoly>& polys) {
  PolySpan span;
  std::map<Monomial, std::size_t> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms())
      if (index.emplace(m, index.size()).second) span.columns.push_back(m);
  // Rebuild the column list in map order for determinism.
  span.columns.clear();
  std::size_t next = 0;
  for (auto& [m, idx] : index) {
    idx = next++;
    span.columns.push_back(m);
  }
  QMatrix rows;
  for (const auto& p : polys) {
    QVector row(index.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
    rows.push_back(std::move(row));
  }
  span.rows = row_space(std::move(rows));
  return span;
}

}  // namespace

GradedCheckReport graded_image_check(const AlgebraPtr& g, const Functional& mu,
                                     std::size_t max_degree,
                                     GeneratorKind kind) {
  if (max_degree < 1)
    throw std::invalid_argument("graded_image_check: max_degree >= 1");
  const std::vector<CPoly> invariants = standard_invariants(*g);
  const MFFamily mf = mf_family(g, invariants, mu);
  const GeneratorFamily quant = a_mu_generators(g, mu, kind);

  // Ordered products of the quantised generators with total filtration
  // degree <= max_degree, and the matching commutative products.
  std::vector<int64_t> qdeg;
  for (const auto& e : quant.elements) qdeg.push_back(e.degree());
  std::vector<PBWElement> qprods;
  std::vector<int64_t> qprod_deg;
  for (int64_t d = 0; d <= static_cast<int64_t>(max_degree); ++d) {
    std::vector<unsigned> counts(qdeg.size(), 0);
    multisets_of_degree(qdeg, 0, d, counts, [&](const std::vector<unsigned>& c) {
      PBWElement prod =
          PBWElement::constant(quant.algebra, Rational(1));
      for (std::size_t i = 0; i < c.size(); ++i)
        for (unsigned t = 0; t < c[i]; ++t) prod = prod * quant.elements[i];
      qprods.push_back(std::move(prod));
      qprod_deg.push_back(d);
    });
  }

  std::vector<int64_t> cdeg;
  for (const auto& e : mf.generators) cdeg.push_back(e.poly.degree());

  GradedCheckReport rep;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    // Commutative side: products of shift generators of total degree d.
    std::vector<CPoly> cprods;
    std::vector<unsigned> counts(cdeg.size(), 0);
    multisets_of_degree(cdeg, 0, static_cast<int64_t>(d), counts,
                        [&](const std::vector<unsigned>& c) {
                          CPoly prod(g->context(), Rational(1));
                          for (std::size_t i = 0; i < c.size(); ++i)
                            for (unsigned t = 0; t < c[i]; ++t)
                              prod = prod * mf.generators[i].poly;
                          cprods.push_back(std::move(prod));
                        });
    const PolySpan mf_span = poly_span(cprods);

    // Quantised side: intersect the product span with filtration degree
    // <= d, then take the top-degree image in S^d.
    std::map<Word, std::size_t> word_index;
    for (const auto& p : qprods)
      for (const auto& [w, c] : p.terms()) word_index.emplace(w, 0);
    {
      std::size_t next = 0;
      for (auto& [w, idx] : word_index) idx = next++;
    }
    QMatrix full, high;
    for (const auto& p : qprods) {
      QVector frow(word_index.size(), Rational(0));
      QVector hrow;
      for (const auto& [w, c] : p.terms()) frow[word_index.at(w)] = c;
      for (const auto& [w, idx] : word_index)
        if (w.size() > d) hrow.push_back(frow[idx]);
      full.push_back(std::move(frow));
      high.push_back(std::move(hrow));
    }
    // Combinations whose components on words longer than d vanish.
    const bool no_long_words = high.empty() || high.front().empty();
    const QMatrix combos =
        no_long_words ? q_identity(qprods.size()) : kernel(q_transpose(high));
    std::vector<CPoly> images;
    for (const auto& combo : combos) {
      QVector vec(word_index.size(), Rational(0));
      for (std::size_t r = 0; r < combo.size(); ++r) {
        if (is_zero(combo[r])) continue;
        for (std::size_t cidx = 0; cidx < vec.size(); ++cidx)
          vec[cidx] += combo[r] * full[r][cidx];
      }
      CPoly img(g->context());
      for (const auto& [w, idx] : word_index) {
        if (w.size() != d || is_zero(vec[idx])) continue;
        Monomial mon;
        for (auto k : w) mon = mon * Monomial::variable(k);
        img.add_term(mon, vec[idx]);
      }
      if (!img.is_zero()) images.push_back(std::move(img));
    }
    const PolySpan gr_span = poly_span(images);

    GradedCheckReport::Row row;
    row.degree = d;
    row.mf_dim = mf_span.rows.size();
    row.gr_dim = gr_span.rows.size();
    // Containment both ways over the union of supports.
    std::map<Monomial, std::size_t> all_index;
    for (const auto& m : mf_span.columns) all_index.emplace(m, 0);
    for (const auto& m : gr_span.columns) all_index.emplace(m, 0);
    {
      std::size_t next = 0;
      for (auto& [m, idx] : all_index) idx = next++;
    }
    const auto respan = [&](const PolySpan& s) {
      QMatrix rows;
      for (const auto& r : s.rows) {
        QVector row2(all_index.size(), Rational(0));
        for (std::size_t c = 0; c < s.columns.size(); ++c)
          row2[all_index.at(s.columns[c])] = r[c];
        rows.push_back(std::move(row2));
      }
      return row_space(std::move(rows));
    };
    const QMatrix mf_rows = respan(mf_span), gr_rows = respan(gr_span);
    row.mf_inside_gr = true;
    for (const auto& r : mf_rows)
      if (!in_row_space(gr_rows, r)) {
        row.mf_inside_gr = false;
        break;
      }
    row.gr_inside_mf = true;
    for (const auto& r : gr_rows)
      if (!in_row_space(mf_rows, r)) {
        row.gr_inside_mf = false;
        break;
      }
    rep.rows.push_back(row);
  }
  return rep;
}

CentraliserQuantisation centraliser_quantisation(const AlgebraPtr& g,
                                                 const Functional& gamma,
                                                 const QVector& nu_values) {
  if (!is_nilpotent(*g, gamma))
    throw std::invalid_argument("centraliser_quantisation: gamma not nilpotent");
  CentraliserQuantisation out;
  const Subspace stab = stabiliser(*g, gamma);
  out.centraliser = restrict_to(g, stab);
  if (nu_values.size() != out.centraliser->dim())
    throw std::invalid_argument("centraliser_quantisation: nu dimension");
  const Functional nu{nu_values, std::nullopt};
  for (const CPoly& h : standard_invariants(*g)) {
    const auto [top, order] = top_shift_component(h, gamma);
    const auto p = to_subalgebra_coords(*g, out.centraliser, top);
    if (!p)
      throw std::logic_error(
          "centraliser_quantisation: top component escapes the centraliser");
    out.top_components.push_back(*p);
    CPoly d = *p;
    const int64_t deg = d.degree();
    for (int64_t k = 0; k < deg; ++k) {
      if (k > 0) d = d.directional_derivative(nu.values);
      if (d.is_zero()) break;
      out.elements.push_back(symmetrise(out.centraliser, d));
    }
  }
  return out;
}

std::size_t independence_witness(const std::vector<CPoly>& elems,
                                 std::size_t trials, uint64_t seed) {
  if (elems.empty()) return 0;
  Sampler smp(seed);
  const std::size_t nvars = elems.front().context()->size();
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const QVector x = smp.vector(nvars);
    best = std::max(best, rank(jacobian_at(elems, x)));
  }
  return best;
}

}  // namespace shiftarg
