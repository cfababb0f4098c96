#pragma once

// Exact dense simplex for  max c.x  s.t.  A x <= b  with x free and b >= 0
// (the origin is feasible). Bland's rule guarantees termination.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flopwin/linalg.hpp"

namespace flopwin::lp {

struct Result {
  bool unbounded = false;
  Rational value;  // valid when !unbounded
};

inline Result maximize(const RVec& c, const linalg::Matrix& a, const RVec& b) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& bi : b)
    if (bi < 0) throw std::invalid_argument("lp::maximize requires a feasible origin");
  // Columns: x+ (n), x- (n), slack (m), rhs.
  const std::size_t cols = 2 * n + m;
  linalg::Matrix t(m, RVec(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a[i][j];
      t[i][n + j] = -a[i][j];
    }
    t[i][2 * n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = 2 * n + i;
  }
  // Reduced costs for maximization: z_j - c_j stored as obj[j].
  RVec obj(cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    obj[j] = -c[j];
    obj[n + j] = c[j];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) return {false, obj[cols]};
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return {true, Rational(0)};
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace flopwin::lp
