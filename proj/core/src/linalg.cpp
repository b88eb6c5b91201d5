#include "shiftarg/linalg.hpp"

#include <stdexcept>

namespace shiftarg {

QMatrix q_identity(std::size_t n) {
  QMatrix m(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix q_zero(std::size_t rows, std::size_t cols) {
  return QMatrix(rows, QVector(cols, Rational(0)));
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  QMatrix r = q_zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("q_mul: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

QMatrix q_transpose(const QMatrix& a) {
  if (a.empty()) return {};
  QMatrix r = q_zero(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

QMatrix q_add(const QMatrix& a, const QMatrix& b) {
  QMatrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

QMatrix q_scale(const QMatrix& a, const Rational& c) {
  QMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

Rational q_trace(const QMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool q_is_zero(const QMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!is_zero(x)) return false;
  return true;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix kernel(const QMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  QMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  QMatrix ker;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][free];
    ker.push_back(std::move(v));
  }
  return row_space(std::move(ker));
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (m.empty()) {
    for (const auto& x : b)
      if (!is_zero(x)) return std::nullopt;
    return QVector{};
  }
  const std::size_t rows = m.size(), cols = m[0].size();
  QMatrix aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  QVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // pivot in the RHS column
    x[pivots[i]] = aug[i][cols];
  }
  // Consistency of rows past the pivot count.
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (!is_zero(aug[i][cols])) return std::nullopt;
  return x;
}

QMatrix q_inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("inverse: not square");
    for (std::size_t j = 0; j < n; ++j)
      aug[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  QMatrix r = q_zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
  return r;
}

QMatrix row_space(QMatrix rows) {
  const auto pivots = rref(rows);
  rows.resize(pivots.size());
  return rows;
}

bool in_row_space(const QMatrix& basis, const QVector& v) {
  QVector w = v;
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (p < row.size() && is_zero(row[p])) ++p;
    if (p == row.size()) continue;
    if (!is_zero(w[p])) {
      const Rational f = w[p];
      for (std::size_t j = p; j < w.size(); ++j) w[j] -= f * row[j];
    }
  }
  for (const auto& x : w)
    if (!is_zero(x)) return false;
  return true;
}

Rational det(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix a = m;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const Rational inv = 1 / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      const Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace shiftarg
