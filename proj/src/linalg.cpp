#include "spheromo/linalg.hpp"

namespace spheromo {

std::vector<std::size_t> rref(QMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(const QMat& m, std::size_t cols) {
  QMat a = m;
  return rref(a, cols).size();
}

QMat nullspace(const QMat& m, std::size_t cols) {
  QMat a = m;
  auto piv = rref(a, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec x = zeros(cols);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b, std::size_t cols) {
  QMat a = m;
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto piv = rref(a, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  QVec x = zeros(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

Rational determinant(QMat m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::size_t affine_rank(const std::vector<QVec>& points) {
  if (points.empty()) return 0;
  QMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(diffs, points[0].size());
}

QMat transpose(const QMat& m, std::size_t cols) {
  QMat t(cols, QVec(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace spheromo
