#include "smtkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace smtkit {

QMatrix to_qmatrix(const std::vector<std::vector<int>>& m) {
  QMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::vector<QVector> nullspace(const QMatrix& m) {
  if (m.empty()) return {};
  const std::size_t n = m[0].size();
  QMatrix a = m;
  auto pivots = rref(a, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (m.empty()) return QVector{};
  const std::size_t n = m[0].size();
  QMatrix a = m;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = rref(a, n);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][n] != 0) return std::nullopt;
  QVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
  return x;
}

std::optional<QVector> expand_over_rows(const QMatrix& rows, const QVector& target) {
  if (rows.empty()) {
    for (const auto& t : target)
      if (t != 0) return std::nullopt;
    return QVector{};
  }
  return solve(transpose(rows), target);
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = 1;
  }
  auto pivots = rref(a, n);
  if (pivots.size() != n) return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace smtkit
