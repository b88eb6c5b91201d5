#include "shiftarg/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

Partition::Partition(std::vector<std::size_t> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == 0)
      throw std::invalid_argument("partition: zero row");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition: rows must be weakly decreasing");
  }
}

std::size_t Partition::total() const {
  std::size_t t = 0;
  for (auto r : rows_) t += r;
  return t;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_.size(); ++i)
    os << (i ? "," : "") << rows_[i];
  os << ")";
  return os.str();
}

Partition induced_partition_A(const std::vector<Partition>& blocks) {
  if (blocks.empty())
    throw std::invalid_argument("induced_partition: empty block list");
  std::size_t depth = 0;
  for (const auto& b : blocks) depth = std::max(depth, b.rows().size());
  std::vector<std::size_t> rows(depth, 0);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows().size(); ++i) rows[i] += b.rows()[i];
  return Partition(std::move(rows));
}

bool symplectically_admissible(const Partition& pi) {
  std::map<std::size_t, std::size_t> mult;
  for (auto r : pi.rows()) ++mult[r];
  for (const auto& [len, m] : mult)
    if (len % 2 == 1 && m % 2 == 1) return false;
  return true;
}

Partition kempken_modify(const Partition& pi) {
  std::vector<std::size_t> rows = pi.rows();
  const std::size_t guard = pi.total() * (pi.rows().size() + 2) + 1;
  for (std::size_t step = 0; step < guard; ++step) {
    std::map<std::size_t, std::size_t> mult;
    for (auto r : rows) ++mult[r];
    std::size_t beta = 0;
    bool found = false;
    for (auto r : rows) {  // from the top of the current diagram
      if (r % 2 == 1 && mult[r] % 2 == 1) {
        beta = r;
        found = true;
        break;
      }
    }
    if (!found) return Partition(std::move(rows));
    std::size_t last = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == beta) last = i;
    rows[last] -= 1;
    if (last + 1 < rows.size())
      rows[last + 1] += 1;
    else
      rows.push_back(1);
    if (rows[last] == 0) rows.erase(rows.begin() + last);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (rows[i] < rows[i + 1])
        throw std::invalid_argument("kempken: procedure stuck");
  }
  throw std::invalid_argument("kempken: procedure stuck");
}

std::size_t row_index(const Partition& pi, std::size_t m) {
  if (m == 0 || m > pi.total())
    throw std::invalid_argument("row_index: m out of range");
  std::size_t acc = 0;
  for (std::size_t r = 0; r < pi.rows().size(); ++r) {
    acc += pi.rows()[r];
    if (m <= acc) return r + 1;
  }
  throw std::logic_error("row_index: unreachable");
}

SkewGeneratorSet generator_set_A(std::size_t N, const Partition& pi) {
  if (pi.total() != N)
    throw std::invalid_argument("generator_set: partition size mismatch");
  SkewGeneratorSet out;
  for (std::size_t m = N; m >= 1; --m) {
    out.gamma_shape.push_back(m);
    out.sigma_shape.push_back(row_index(pi, m) - 1);
    const std::size_t keep_max = m - row_index(pi, m);
    for (std::size_t k = m; k-- > keep_max + 1;) out.excluded.emplace_back(m, k);
    for (std::size_t k = keep_max + 1; k-- > 0;) out.cells.emplace_back(m, k);
  }
  return out;
}

SkewGeneratorSet generator_set_C(std::size_t n, const Partition& pi_gamma) {
  if (pi_gamma.total() != 2 * n)
    throw std::invalid_argument("generator_set: partition size mismatch");
  if (!symplectically_admissible(pi_gamma))
    throw std::invalid_argument("generator_set: inadmissible partition");
  SkewGeneratorSet out;
  for (std::size_t m = n; m >= 1; --m) {
    const std::size_t row = 2 * m;
    out.gamma_shape.push_back(row);
    out.sigma_shape.push_back(row_index(pi_gamma, row) - 1);
    const std::size_t keep_max = row - row_index(pi_gamma, row);
    for (std::size_t k = row; k-- > keep_max + 1;)
      out.excluded.emplace_back(row, k);
    for (std::size_t k = keep_max + 1; k-- > 0;) out.cells.emplace_back(row, k);
  }
  return out;
}

std::size_t expected_generator_count(const LieAlgebra& g,
                                     const Functional& gamma) {
  if (g.rank() < 0)
    throw std::invalid_argument("expected_generator_count: unknown rank");
  const std::size_t orbit = g.dim() - stabiliser(g, gamma).dim();
  return orbit / 2 + static_cast<std::size_t>(g.rank());
}

namespace {

void partitions_rec(std::size_t n, std::size_t cap,
                    std::vector<std::size_t>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t first = std::min(cap, n); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> symplectic_partitions(std::size_t total) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(total))
    if (symplectically_admissible(p)) out.push_back(p);
  return out;
}

DiagramReport diagram_from_jordan(
    char type, const std::vector<LabelledJordanBlock>& blocks) {
  if (blocks.empty())
    throw std::invalid_argument("diagram: empty Jordan datum");
  std::vector<Partition> parts;
  for (const auto& b : blocks) parts.push_back(b.sizes);
  DiagramReport rep;
  rep.pi = induced_partition_A(parts);
  const std::size_t N = rep.pi.total();

  if (type == 'A') {
    rep.pi_gamma = rep.pi;
    for (std::size_t m = 1; m <= N; ++m) rep.r[m] = row_index(rep.pi, m);
    rep.cells = generator_set_A(N, rep.pi);
    rep.sigma = rep.cells.sigma_shape;
    return rep;
  }
  if (type != 'C') throw std::invalid_argument("diagram: type must be A or C");

  // Symplectic admissibility of the labelled datum.
  const auto negate = [](const std::string& s) {
    return s.size() > 1 && s[0] == '-' ? s.substr(1) : "-" + s;
  };
  std::map<std::string, std::vector<std::size_t>> by_ev;
  for (const auto& b : blocks) {
    auto& rows = by_ev[b.eigenvalue];
    rows.insert(rows.end(), b.sizes.rows().begin(), b.sizes.rows().end());
  }
  for (auto& [ev, rows] : by_ev) std::sort(rows.rbegin(), rows.rend());
  for (const auto& [ev, rows] : by_ev) {
    if (ev == "0") {
      if (!symplectically_admissible(Partition(rows)))
        throw std::invalid_argument(
            "diagram: odd rows at eigenvalue zero must occur evenly");
      continue;
    }
    auto it = by_ev.find(negate(ev));
    if (it == by_ev.end() || it->second != rows)
      throw std::invalid_argument(
          "diagram: nonzero eigenvalues need matching +/- pairs");
  }
  if (N % 2 != 0) throw std::invalid_argument("diagram: odd total size");

  rep.pi_gamma = kempken_modify(rep.pi);
  for (std::size_t m = 2; m <= N; m += 2)
    rep.r[m] = row_index(rep.pi_gamma, m);
  rep.cells = generator_set_C(N / 2, rep.pi_gamma);
  rep.sigma = rep.cells.sigma_shape;
  return rep;
}

}  // namespace shiftarg
