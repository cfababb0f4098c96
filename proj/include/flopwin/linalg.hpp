#pragma once

// Dense exact linear algebra over the rationals. Matrices are row-major
// vectors of rows; all routines are sized for the few-hundred-dimensional
// graded pieces that appear in this library.

#include <cstddef>
#include <utility>
#include <vector>

#include "flopwin/rational.hpp"

namespace flopwin::linalg {

using Matrix = std::vector<RVec>;

inline Matrix zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, RVec(cols, Rational(0)));
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<RVec> nullspace(Matrix m, std::size_t cols) {
  if (m.empty()) {
    std::vector<RVec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
      RVec e(cols, Rational(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a square system; returns false when singular.
inline bool solve(Matrix a, RVec b, RVec& x) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  Matrix aug = a;
  auto piv = rref(aug);
  if (piv.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (piv[i] != i) return false;
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return true;
}

/// True iff the row spaces of a and b coincide.
inline bool same_span(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  Matrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(both) == ra;
}

inline Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace flopwin::linalg
