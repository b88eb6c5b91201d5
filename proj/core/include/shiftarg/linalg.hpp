#pragma once

#include <optional>
#include <vector>

#include "shiftarg/rational.hpp"

namespace shiftarg {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major, rectangular

QMatrix q_identity(std::size_t n);
QMatrix q_zero(std::size_t rows, std::size_t cols);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
QMatrix q_transpose(const QMatrix& a);
QMatrix q_add(const QMatrix& a, const QMatrix& b);
QMatrix q_scale(const QMatrix& a, const Rational& c);
Rational q_trace(const QMatrix& a);
bool q_is_zero(const QMatrix& a);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of the right kernel {x : m x = 0}, rows in RREF of the kernel.
QMatrix kernel(const QMatrix& m);

/// Solves m x = b; empty optional when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Inverse of a square nonsingular matrix; throws when singular.
QMatrix q_inverse(const QMatrix& m);

/// Row space of `rows` in canonical (RREF, zero rows dropped) form.
QMatrix row_space(QMatrix rows);

/// True if v lies in the span of the RREF rows `basis`.
bool in_row_space(const QMatrix& basis, const QVector& v);

Rational det(const QMatrix& m);

}  // namespace shiftarg
