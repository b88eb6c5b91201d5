#include "shiftarg/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace shiftarg {

namespace {

std::size_t primed(std::size_t i, std::size_t N) { return N - i + 1; }

int sp_eps(std::size_t i, std::size_t n) {
  return i <= n ? 1 : -1;  // 1-based index
}

// Basis positions (1-based (i, j)) for the chosen spanning half.
std::vector<std::pair<std::size_t, std::size_t>> classical_positions(
    ClassicalType type, std::size_t N) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j + i <= N; ++j) pos.emplace_back(i, j);
  if (type == ClassicalType::C)
    for (std::size_t i = 1; i <= N; ++i) pos.emplace_back(i, primed(i, N));
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Coefficients of the basis decomposition of a matrix known to lie in the
// algebra; verified by reconstruction.
QVector decompose_matrix(const LieAlgebra& g, const QMatrix& x) {
  const std::size_t N = g.matrix_size();
  QVector coords(g.dim(), Rational(0));
  if (g.family() == AlgebraFamily::GL) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) coords[i * N + j] = x[i][j];
    return coords;
  }
  for (uint32_t k = 0; k < g.dim(); ++k) {
    const auto& name = g.labels()[k];
    // Positions are recoverable from the label "F_i_j".
    const auto us1 = name.find('_');
    const auto us2 = name.find('_', us1 + 1);
    const std::size_t i = std::stoul(name.substr(us1 + 1, us2 - us1 - 1));
    const std::size_t j = std::stoul(name.substr(us2 + 1));
    coords[k] = x[i - 1][j - 1];
    if (g.family() == AlgebraFamily::SP && j == primed(i, N))
      coords[k] /= 2;  // F_{i,i'} = 2 E_{i,i'}
  }
  QMatrix recon = q_zero(N, N);
  for (uint32_t k = 0; k < g.dim(); ++k)
    if (!is_zero(coords[k]))
      recon = q_add(recon, q_scale(g.basis_matrix(k), coords[k]));
  if (recon != x)
    throw std::invalid_argument("lie: matrix does not lie in the algebra");
  return coords;
}

// Reduces w against RREF rows; returns the combination coefficients, or
// nullopt when w is outside the row space.
std::optional<QVector> express(const QMatrix& rref_rows, QVector w) {
  QVector coef(rref_rows.size(), Rational(0));
  for (std::size_t r = 0; r < rref_rows.size(); ++r) {
    const auto& row = rref_rows[r];
    std::size_t p = 0;
    while (p < row.size() && is_zero(row[p])) ++p;
    if (p == row.size()) continue;
    if (!is_zero(w[p])) {
      coef[r] = w[p];
      for (std::size_t j = p; j < w.size(); ++j) w[j] -= coef[r] * row[j];
    }
  }
  for (const auto& x : w)
    if (!is_zero(x)) return std::nullopt;
  return coef;
}

QMatrix jordan_matrix(const Rational& ev,
                      const std::vector<std::size_t>& sizes) {
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  QMatrix j = q_zero(total, total);
  std::size_t p = 0;
  for (auto s : sizes) {
    for (std::size_t t = 0; t < s; ++t) {
      j[p + t][p + t] = ev;
      if (t + 1 < s) j[p + t][p + t + 1] = 1;
    }
    p += s;
  }
  return j;
}

}  // namespace

std::size_t LieAlgebra::WordGenHash::operator()(const WordGenKey& k) const {
  std::size_t h = std::hash<uint32_t>()(k.gen);
  for (auto x : k.word) h = h * 1000003u + x + 1;
  return h;
}

LieAlgebra::LieAlgebra(AlgebraFamily family, std::vector<std::string> labels,
                       std::vector<QMatrix> basis_matrices,
                       std::size_t matrix_size, int rank)
    : family_(family),
      labels_(std::move(labels)),
      basis_matrices_(std::move(basis_matrices)),
      matrix_size_(matrix_size),
      rank_(rank) {
  auto names = labels_;
  names.push_back("u");
  names.push_back("zinv");
  ctx_ = make_context(std::move(names), labels_.size());
  table_.assign(dim() * dim(), SparseVec{});
  if (!basis_matrices_.empty()) build_table_from_matrices();
}

void LieAlgebra::build_table_from_matrices() {
  const std::size_t r = dim();
  for (uint32_t i = 0; i < r; ++i) {
    for (uint32_t j = i + 1; j < r; ++j) {
      QMatrix x = q_mul(basis_matrices_[i], basis_matrices_[j]);
      const QMatrix yx = q_mul(basis_matrices_[j], basis_matrices_[i]);
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b) x[a][b] -= yx[a][b];
      const QVector coords = decompose_matrix(*this, x);
      SparseVec sv;
      for (uint32_t k = 0; k < r; ++k)
        if (!is_zero(coords[k])) sv.emplace_back(k, coords[k]);
      table_[i * r + j] = std::move(sv);
    }
  }
}

SparseVec LieAlgebra::bracket(uint32_t i, uint32_t j) const {
  if (i == j) return {};
  if (i < j) return table_[i * dim() + j];
  SparseVec sv = table_[j * dim() + i];
  for (auto& [k, c] : sv) c = -c;
  return sv;
}

QVector LieAlgebra::bracket_vectors(const QVector& u, const QVector& v) const {
  QVector out(dim(), Rational(0));
  for (uint32_t i = 0; i < dim(); ++i) {
    if (is_zero(u[i])) continue;
    for (uint32_t j = 0; j < dim(); ++j) {
      if (j == i || is_zero(v[j])) continue;
      const Rational f = u[i] * v[j];
      if (i < j) {
        for (const auto& [k, c] : table_[i * dim() + j]) out[k] += f * c;
      } else {
        for (const auto& [k, c] : table_[j * dim() + i]) out[k] -= f * c;
      }
    }
  }
  return out;
}

CPoly LieAlgebra::bracket_poly(uint32_t i, uint32_t j) const {
  CPoly p(ctx_);
  for (const auto& [k, c] : bracket(i, j))
    p.add_term(Monomial::variable(k), c);
  return p;
}

const QMatrix& LieAlgebra::basis_matrix(uint32_t k) const {
  if (basis_matrices_.empty())
    throw std::logic_error("lie: no matrix realisation for this algebra");
  return basis_matrices_.at(k);
}

QMatrix LieAlgebra::element_matrix(const QVector& coords) const {
  QMatrix m = q_zero(matrix_size_, matrix_size_);
  for (uint32_t k = 0; k < dim(); ++k)
    if (!is_zero(coords[k])) m = q_add(m, q_scale(basis_matrix(k), coords[k]));
  return m;
}

bool LieAlgebra::jacobi_holds(uint32_t i, uint32_t j, uint32_t k) const {
  QVector ei(dim(), Rational(0)), ej(dim(), Rational(0)),
      ek(dim(), Rational(0));
  ei[i] = 1, ej[j] = 1, ek[k] = 1;
  QVector s = bracket_vectors(bracket_vectors(ei, ej), ek);
  const QVector t1 = bracket_vectors(bracket_vectors(ej, ek), ei);
  const QVector t2 = bracket_vectors(bracket_vectors(ek, ei), ej);
  for (uint32_t a = 0; a < dim(); ++a) {
    s[a] += t1[a] + t2[a];
    if (!is_zero(s[a])) return false;
  }
  return true;
}

void LieAlgebra::validate_jacobi() const {
  const std::size_t r = dim();
  if (r <= 50) {
    for (uint32_t i = 0; i < r; ++i)
      for (uint32_t j = i + 1; j < r; ++j)
        for (uint32_t k = j + 1; k < r; ++k)
          if (!jacobi_holds(i, j, k))
            throw std::logic_error("lie: Jacobi identity fails");
    return;
  }
  std::mt19937_64 rng(0x6a61636f62ULL);
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(r - 1));
  for (int t = 0; t < 2000; ++t) {
    uint32_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (i == j || j == k || i == k) continue;
    if (!jacobi_holds(i, j, k))
      throw std::logic_error("lie: Jacobi identity fails");
  }
}

const LieAlgebra::MemoValue* LieAlgebra::memo_find(const WordGenKey& k) const {
  std::shared_lock lock(memo_mutex_);
  auto it = memo_.find(k);
  return it == memo_.end() ? nullptr : &it->second;
}

const LieAlgebra::MemoValue* LieAlgebra::memo_store(const WordGenKey& k,
                                                    MemoValue v) const {
  std::unique_lock lock(memo_mutex_);
  return &memo_.emplace(std::move(k), std::move(v)).first->second;
}

AlgebraPtr build_gl(std::size_t N) {
  if (N == 0) throw std::invalid_argument("build_gl: N must be positive");
  std::vector<std::string> labels;
  std::vector<QMatrix> mats;
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = 1; j <= N; ++j) {
      labels.push_back("E_" + std::to_string(i) + "_" + std::to_string(j));
      QMatrix m = q_zero(N, N);
      m[i - 1][j - 1] = 1;
      mats.push_back(std::move(m));
    }
  }
  auto g = std::make_shared<LieAlgebra>(AlgebraFamily::GL, std::move(labels),
                                        std::move(mats), N,
                                        static_cast<int>(N));
  g->validate_jacobi();
  return g;
}

AlgebraPtr build_classical(ClassicalType type, std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("build_classical: n must be positive");
  const std::size_t N = type == ClassicalType::B   ? 2 * n + 1
                        : type == ClassicalType::C ? 2 * n
                                                   : 2 * n;
  const AlgebraFamily fam =
      type == ClassicalType::C ? AlgebraFamily::SP : AlgebraFamily::O;
  const auto halfn = type == ClassicalType::B ? n : N / 2;
  std::vector<std::string> labels;
  std::vector<QMatrix> mats;
  for (const auto& [i, j] : classical_positions(type, N)) {
    labels.push_back("F_" + std::to_string(i) + "_" + std::to_string(j));
    QMatrix m = q_zero(N, N);
    m[i - 1][j - 1] += 1;
    if (fam == AlgebraFamily::SP)
      m[primed(j, N) - 1][primed(i, N) - 1] -=
          Rational(sp_eps(i, halfn) * sp_eps(j, halfn));
    else
      m[primed(j, N) - 1][primed(i, N) - 1] -= 1;
    mats.push_back(std::move(m));
  }
  auto g = std::make_shared<LieAlgebra>(fam, std::move(labels),
                                        std::move(mats), N,
                                        static_cast<int>(n));
  g->validate_jacobi();
  return g;
}

std::optional<std::pair<uint32_t, Rational>> span_entry(const LieAlgebra& g,
                                                        std::size_t i,
                                                        std::size_t j) {
  const std::size_t N = g.matrix_size();
  if (i < 1 || j < 1 || i > N || j > N)
    throw std::invalid_argument("span_entry: index out of range");
  if (g.family() == AlgebraFamily::GL)
    return std::make_pair(static_cast<uint32_t>((i - 1) * N + (j - 1)),
                          Rational(1));
  const auto find_label = [&](std::size_t a, std::size_t b) {
    const std::string lbl =
        "F_" + std::to_string(a) + "_" + std::to_string(b);
    for (uint32_t k = 0; k < g.dim(); ++k)
      if (g.labels()[k] == lbl) return k;
    throw std::logic_error("span_entry: missing basis label " + lbl);
  };
  const std::size_t ip = primed(i, N), jp = primed(j, N);
  if (i + j <= N) return std::make_pair(find_label(i, j), Rational(1));
  if (i + j == N + 1) {
    if (g.family() == AlgebraFamily::O) return std::nullopt;  // F_{i,i'} = 0
    return std::make_pair(find_label(i, j), Rational(1));
  }
  // Partner position (j', i') carries the basis element.
  if (g.family() == AlgebraFamily::O)
    return std::make_pair(find_label(jp, ip), Rational(-1));
  const std::size_t hn = N / 2;
  return std::make_pair(find_label(jp, ip),
                        Rational(-sp_eps(i, hn) * sp_eps(j, hn)));
}

AlgebraPtr build_from_table(std::vector<std::string> labels,
                            std::vector<SparseVec> table, int rank) {
  const std::size_t d = labels.size();
  if (table.size() != d * d)
    throw std::invalid_argument("build_from_table: table size must be dim^2");
  auto g = std::make_shared<LieAlgebra>(AlgebraFamily::Subalgebra,
                                        std::move(labels),
                                        std::vector<QMatrix>{}, 0, rank);
  for (uint32_t i = 0; i < d; ++i) {
    if (!table[i * d + i].empty())
      throw std::invalid_argument("build_from_table: [x,x] must vanish");
    for (uint32_t j = 0; j < i; ++j)
      if (!table[i * d + j].empty())
        throw std::invalid_argument(
            "build_from_table: only i < j entries may be set");
  }
  g->set_table(std::move(table));
  g->validate_jacobi();
  return g;
}

Subspace stabiliser(const LieAlgebra& g, const Functional& gamma) {
  const std::size_t r = g.dim();
  QMatrix form = q_zero(r, r);
  for (uint32_t i = 0; i < r; ++i) {
    for (uint32_t j = i + 1; j < r; ++j) {
      Rational v = 0;
      for (const auto& [k, c] : g.bracket(i, j)) v += c * gamma.values[k];
      form[i][j] = v;
      form[j][i] = -v;
    }
  }
  return Subspace{kernel(form)};
}

AlgebraPtr restrict_to(const AlgebraPtr& g, const Subspace& s) {
  const std::size_t d = s.dim(), r = g->dim();
  std::vector<SparseVec> table(d * d);
  for (uint32_t u = 0; u < d; ++u) {
    for (uint32_t v = u + 1; v < d; ++v) {
      const QVector w = g->bracket_vectors(s.basis[u], s.basis[v]);
      const auto coef = express(s.basis, w);
      if (!coef)
        throw std::invalid_argument(
            "restrict: subspace is not closed under the bracket");
      SparseVec sv;
      for (uint32_t k = 0; k < d; ++k)
        if (!is_zero((*coef)[k])) sv.emplace_back(k, (*coef)[k]);
      table[u * d + v] = std::move(sv);
    }
  }
  std::vector<std::string> labels;
  for (uint32_t u = 0; u < d; ++u) {
    std::size_t nz = 0, pos = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (!is_zero(s.basis[u][i])) ++nz, pos = i;
    if (nz == 1 && s.basis[u][pos] == 1)
      labels.push_back(g->labels()[pos]);
    else
      labels.push_back("q" + std::to_string(u));
  }
  std::vector<QMatrix> mats;
  if (g->matrix_size() > 0)
    for (uint32_t u = 0; u < d; ++u) mats.push_back(g->element_matrix(s.basis[u]));
  auto sub = std::make_shared<LieAlgebra>(AlgebraFamily::Subalgebra,
                                          std::move(labels), std::vector<QMatrix>{},
                                          g->matrix_size(), -1);
  sub->set_table(std::move(table));
  sub->basis_matrices_ = std::move(mats);
  sub->parent_ = g;
  sub->embedding_ = s.basis;
  sub->validate_jacobi();
  return sub;
}

std::size_t index_estimate(const LieAlgebra& g, std::size_t trials,
                           uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("index_estimate: trials >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-10, 10);
  std::size_t best = g.dim();
  for (std::size_t t = 0; t < trials; ++t) {
    Functional f;
    f.values.reserve(g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k)
      f.values.emplace_back(pick(rng));
    best = std::min(best, stabiliser(g, f).dim());
  }
  return best;
}

Rational b_of(std::size_t dimension, std::size_t index) {
  if (index > dimension)
    throw std::invalid_argument("b_of: index exceeds dimension");
  return rat(static_cast<long>(dimension + index), 2);
}

Functional functional_from_values(const LieAlgebra& g, QVector values) {
  if (values.size() != g.dim())
    throw std::invalid_argument("functional: value vector length mismatch");
  return Functional{std::move(values), std::nullopt};
}

Functional functional_from_matrix(const LieAlgebra& g, QMatrix a) {
  if (g.family() != AlgebraFamily::GL) decompose_matrix(g, a);  // membership
  Functional f;
  f.values.reserve(g.dim());
  for (uint32_t k = 0; k < g.dim(); ++k)
    f.values.push_back(q_trace(q_mul(a, g.basis_matrix(k))));
  f.matrix = std::move(a);
  return f;
}

QMatrix mu_matrix(const LieAlgebra& g, const Functional& f) {
  const std::size_t N = g.matrix_size();
  QMatrix m = q_zero(N, N);
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (const auto e = span_entry(g, i, j))
        m[i - 1][j - 1] = e->second * f.values[e->first];
  return m;
}

QMatrix functional_matrix(const LieAlgebra& g, const Functional& f) {
  if (f.matrix) return *f.matrix;
  const std::size_t r = g.dim();
  QMatrix gram = q_zero(r, r);
  for (uint32_t a = 0; a < r; ++a)
    for (uint32_t b = 0; b < r; ++b)
      gram[a][b] = q_trace(q_mul(g.basis_matrix(a), g.basis_matrix(b)));
  const auto sol = solve(gram, f.values);
  if (!sol)
    throw std::invalid_argument("functional: no trace-form representative");
  return g.element_matrix(*sol);
}

bool is_nilpotent(const LieAlgebra& g, const Functional& f) {
  QMatrix a = functional_matrix(g, f);
  QMatrix p = a;
  for (std::size_t k = 1; k < g.matrix_size(); ++k) p = q_mul(p, a);
  return q_is_zero(p);
}

QVector restrict_values(const Functional& f, const Subspace& s) {
  QVector out;
  out.reserve(s.dim());
  for (const auto& row : s.basis) {
    Rational v = 0;
    for (std::size_t i = 0; i < row.size(); ++i) v += row[i] * f.values[i];
    out.push_back(std::move(v));
  }
  return out;
}

Functional jordan_to_functional(const LieAlgebra& g,
                                const std::vector<JordanBlockData>& blocks) {
  const std::size_t N = g.matrix_size();
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.sizes.empty())
      throw std::invalid_argument("jordan: empty block list");
    for (std::size_t t = 0; t + 1 < b.sizes.size(); ++t)
      if (b.sizes[t] < b.sizes[t + 1])
        throw std::invalid_argument("jordan: sizes must be weakly decreasing");
    for (auto s : b.sizes) total += s;
  }
  if (total != N) throw std::invalid_argument("jordan: total size mismatch");

  if (g.family() == AlgebraFamily::GL) {
    QMatrix a = q_zero(N, N);
    std::size_t p = 0;
    for (const auto& b : blocks) {
      std::size_t s = 0;
      for (auto x : b.sizes) s += x;
      const QMatrix jb = jordan_matrix(b.eigenvalue, b.sizes);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[p + i][p + j] = jb[i][j];
      p += s;
    }
    return functional_from_matrix(g, std::move(a));
  }

  if (g.family() != AlgebraFamily::SP)
    throw std::invalid_argument("jordan: GL or SP algebra required");
  const std::size_t n = N / 2;

  // Symplectic admissibility.
  std::map<Rational, std::vector<std::size_t>> by_ev;
  for (const auto& b : blocks) {
    auto& v = by_ev[b.eigenvalue];
    v.insert(v.end(), b.sizes.begin(), b.sizes.end());
  }
  for (auto& [ev, sizes] : by_ev) std::sort(sizes.rbegin(), sizes.rend());
  if (by_ev.count(Rational(0))) {
    std::map<std::size_t, std::size_t> mult;
    for (auto s : by_ev[Rational(0)]) ++mult[s];
    for (const auto& [s, m] : mult)
      if (s % 2 == 1 && m % 2 == 1)
        throw std::invalid_argument(
            "jordan: odd rows at eigenvalue zero must occur evenly");
  }
  for (const auto& [ev, sizes] : by_ev) {
    if (is_zero(ev)) continue;
    auto it = by_ev.find(-ev);
    if (it == by_ev.end() || it->second != sizes)
      throw std::invalid_argument(
          "jordan: nonzero eigenvalues need matching +/- pairs");
  }

  // Slot embedding. Each +/- pair of diagrams occupies a gl_s slot acting
  // on rows p+1..p+s, mirrored on the primed block; paired odd rows of the
  // zero diagram use the same construction with eigenvalue 0, and each even
  // zero row 2k becomes the regular nilpotent of an inner sp_2k slot.
  QMatrix a = q_zero(N, N);
  std::size_t p = 0;
  const auto place_gl_slot = [&](const Rational& ev,
                                 const std::vector<std::size_t>& sizes) {
    std::size_t s = 0;
    for (auto x : sizes) s += x;
    if (p + s > n) throw std::logic_error("jordan: slot overflow");
    const QMatrix jb = jordan_matrix(ev, sizes);
    for (std::size_t i = 1; i <= s; ++i)
      for (std::size_t j = 1; j <= s; ++j) {
        if (is_zero(jb[i - 1][j - 1])) continue;
        a[p + i - 1][p + j - 1] += jb[i - 1][j - 1];
        a[primed(p + j, N) - 1][primed(p + i, N) - 1] -= jb[i - 1][j - 1];
      }
    p += s;
  };
  const auto place_sp_slot = [&](std::size_t size) {
    const std::size_t k = size / 2;
    if (p + k > n) throw std::logic_error("jordan: slot overflow");
    const auto glob = [&](std::size_t t) {  // local 1..2k to global
      return t <= k ? p + t : N - p - 2 * k + t;
    };
    for (std::size_t t = 1; t < size; ++t)
      a[glob(t) - 1][glob(t + 1) - 1] = t <= k ? 1 : -1;
    p += k;
  };
  std::vector<Rational> done;
  for (const auto& [ev, sizes] : by_ev) {
    if (is_zero(ev)) continue;
    if (std::find(done.begin(), done.end(), -ev) != done.end()) continue;
    done.push_back(ev);
    place_gl_slot(ev, sizes);
  }
  if (by_ev.count(Rational(0))) {
    std::map<std::size_t, std::size_t> mult;
    for (auto s : by_ev[Rational(0)]) ++mult[s];
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      const std::size_t row = it->first;
      std::size_t m = it->second;
      if (row % 2 == 1) {
        for (; m > 0; m -= 2) place_gl_slot(Rational(0), {row});
      } else {
        for (; m > 0; --m) place_sp_slot(row);
      }
    }
  }

  // Verify the Jordan type per eigenvalue through kernel dimensions.
  for (const auto& [ev, sizes] : by_ev) {
    QMatrix shifted = a;
    for (std::size_t i = 0; i < N; ++i) shifted[i][i] -= ev;
    QMatrix pw = q_identity(N);
    for (std::size_t j = 1; j <= sizes.front(); ++j) {
      pw = q_mul(pw, shifted);
      std::size_t expect = 0;
      for (auto s : sizes) expect += std::min(s, j);
      if (N - rank(pw) != expect)
        throw std::logic_error("jordan: embedding has wrong Jordan type");
    }
  }
  return functional_from_matrix(g, std::move(a));
}

std::optional<CPoly> to_subalgebra_coords(const LieAlgebra& parent,
                                          const AlgebraPtr& sub,
                                          const CPoly& p) {
  const std::size_t r = parent.dim(), s = sub->dim();
  const QMatrix& b = sub->embedding();
  // Complete the echelon basis with the unit vectors of non-pivot columns.
  std::vector<bool> is_pivot(r, false);
  for (const auto& row : b) {
    std::size_t q = 0;
    while (q < r && is_zero(row[q])) ++q;
    if (q < r) is_pivot[q] = true;
  }
  QMatrix full = b;
  std::vector<std::string> names(sub->labels());
  for (std::size_t i = 0; i < r; ++i) {
    if (is_pivot[i]) continue;
    QVector unit(r, Rational(0));
    unit[i] = 1;
    full.push_back(std::move(unit));
    names.push_back("c" + std::to_string(i));
  }
  names.push_back("u");
  names.push_back("zinv");
  const auto mix = make_context(std::move(names), r);
  const QMatrix inv = q_inverse(full);
  // Old coordinate x_i becomes sum_j inv[i][j] * (new variable j); the
  // formal variables pass through unchanged.
  std::vector<CPoly> images;
  for (std::size_t i = 0; i < r; ++i) {
    CPoly li(mix);
    for (std::size_t j = 0; j < r; ++j)
      li.add_term(Monomial::variable(static_cast<uint32_t>(j)), inv[i][j]);
    images.push_back(std::move(li));
  }
  images.push_back(CPoly::variable(mix, static_cast<uint32_t>(r)));
  images.push_back(CPoly::variable(mix, static_cast<uint32_t>(r + 1)));
  const CPoly mixed = substitute_cross(p, mix, images);
  // Membership: only the first s (subalgebra) variables may survive.
  for (const auto& [m, c] : mixed.terms())
    for (const auto& [i, e] : m.exps())
      if (i >= s && i < r) return std::nullopt;
  CPoly out(sub->context());
  for (const auto& [m, c] : mixed.terms()) {
    std::vector<std::pair<uint32_t, uint32_t>> exps;
    for (const auto& [i, e] : m.exps())
      exps.emplace_back(i < s ? i : i - static_cast<uint32_t>(r - s), e);
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

CPoly from_subalgebra_coords(const LieAlgebra& parent, const LieAlgebra& sub,
                             const CPoly& p) {
  const QMatrix& b = sub.embedding();
  std::vector<CPoly> images;
  for (std::size_t j = 0; j < sub.dim(); ++j) {
    CPoly li(parent.context());
    for (std::size_t i = 0; i < parent.dim(); ++i)
      li.add_term(Monomial::variable(static_cast<uint32_t>(i)), b[j][i]);
    images.push_back(std::move(li));
  }
  images.push_back(
      CPoly::variable(parent.context(), static_cast<uint32_t>(parent.dim())));
  images.push_back(CPoly::variable(parent.context(),
                                   static_cast<uint32_t>(parent.dim() + 1)));
  return substitute_cross(p, parent.context(), images);
}

}  // namespace shiftarg
