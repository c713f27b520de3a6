#pragma once

// Small exact linear algebra over Q. Matrices here are at most ~20x20,
// so plain Gaussian elimination is the right tool.

#include "smtkit/rational.hpp"

#include <optional>
#include <vector>

namespace smtkit {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

QMatrix to_qmatrix(const std::vector<std::vector<int>>& m);
QMatrix transpose(const QMatrix& m);

Rational determinant(QMatrix m);
std::size_t rank(QMatrix m);

// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);

// One solution of m x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Coefficients c with sum_i c_i rows[i] = target; nullopt if target is outside the span.
std::optional<QVector> expand_over_rows(const QMatrix& rows, const QVector& target);

std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace smtkit
