#pragma once

// Character and cocharacter lattices of the maximal torus, the pairing
// between them, and the GIT presentation datum (roots, weights with
// multiplicity, Weyl generators) that every polyhedral computation reads.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flopwin/linalg.hpp"
#include "flopwin/rational.hpp"

namespace flopwin {

/// Element of the character lattice M.
struct Weight {
  IVec coords;

  Weight() = default;
  explicit Weight(IVec c) : coords(std::move(c)) {}
  Weight(std::initializer_list<long> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  long operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long x) { return x == 0; });
  }
  Weight operator-() const {
    Weight w = *this;
    for (auto& x : w.coords) x = -x;
    return w;
  }
  Weight operator+(const Weight& o) const {
    if (o.rank() != rank()) throw DimensionError("weight rank mismatch");
    Weight w = *this;
    for (std::size_t i = 0; i < rank(); ++i) w.coords[i] += o.coords[i];
    return w;
  }
  auto operator<=>(const Weight&) const = default;
};

/// Element of the cocharacter lattice N (a one-parameter subgroup of T).
struct Cocharacter {
  IVec coords;

  Cocharacter() = default;
  explicit Cocharacter(IVec c) : coords(std::move(c)) {}
  Cocharacter(std::initializer_list<long> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  long operator[](std::size_t i) const { return coords[i]; }
  bool is_primitive() const { return gcd_of(coords) == 1; }
  bool is_zero() const { return gcd_of(coords) == 0; }
  Cocharacter operator-() const {
    Cocharacter c = *this;
    for (auto& x : c.coords) x = -x;
    return c;
  }
  auto operator<=>(const Cocharacter&) const = default;
};

using IMatrix = std::vector<IVec>;

struct WeightMult {
  Weight vec;
  long mult = 1;
  auto operator<=>(const WeightMult&) const = default;
};

/// Roots Φ, representation weights Ψ (with multiplicity) and Weyl generators.
struct GitPresentation {
  long rank = 0;
  std::vector<Weight> roots;
  std::vector<WeightMult> weights;
  std::vector<IMatrix> weyl;

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
};

inline long pair(const Cocharacter& l, const Weight& w) {
  if (l.rank() != w.rank()) throw DimensionError("pairing rank mismatch");
  long s = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) s += l[i] * w[i];
  return s;
}

inline Rational pair(const Cocharacter& l, const RVec& x) {
  if (l.rank() != x.size()) throw DimensionError("pairing rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += l[i] * x[i];
  return s;
}

inline Weight apply(const IMatrix& m, const Weight& w) {
  if (m.size() != w.rank()) throw DimensionError("matrix/weight rank mismatch");
  Weight out(IVec(w.rank(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < w.rank(); ++j) out.coords[i] += m[i][j] * w[j];
  return out;
}

/// Weyl matrices act on N through the inverse transpose; for the permutation
/// and sign matrices used here that is the matrix itself, but we keep the
/// general formula.
inline Cocharacter apply_dual(const IMatrix& m, const Cocharacter& l) {
  const std::size_t n = m.size();
  linalg::Matrix a(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];  // transpose
  // Solve (m^T) y = l  ->  y = m^{-T} l
  RVec y;
  if (!linalg::solve(a, to_rvec(l.coords), y)) throw std::invalid_argument("singular Weyl matrix");
  IVec out;
  for (auto& v : y) {
    if (v.get_den() != 1) throw std::invalid_argument("Weyl matrix not unimodular");
    out.push_back(to_long(v.get_num()));
  }
  return Cocharacter(out);
}

namespace detail {

inline long det(const IMatrix& m) {
  const std::size_t n = m.size();
  linalg::Matrix a(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return to_long(d.get_num());
}

inline std::map<Weight, long> multiset(const std::vector<WeightMult>& ws) {
  std::map<Weight, long> m;
  for (const auto& w : ws) m[w.vec] += w.mult;
  return m;
}

}  // namespace detail

inline void GitPresentation::validate() const {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  auto check_rank = [this](const Weight& w, const char* what) {
    if (static_cast<long>(w.rank()) != rank)
      throw DimensionError(std::string(what) + " has wrong length");
  };
  for (const auto& r : roots) check_rank(r, "root");
  for (const auto& w : weights) {
    check_rank(w.vec, "weight");
    if (w.mult < 1) throw std::invalid_argument("weight multiplicity must be >= 1");
  }
  std::set<Weight> root_set(roots.begin(), roots.end());
  auto psi = detail::multiset(weights);
  for (const auto& m : weyl) {
    if (static_cast<long>(m.size()) != rank)
      throw DimensionError("Weyl generator has wrong size");
    for (const auto& row : m)
      if (static_cast<long>(row.size()) != rank) throw DimensionError("Weyl generator has wrong size");
    long d = detail::det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("Weyl generator not invertible over Z");
    std::set<Weight> moved;
    for (const auto& r : roots) moved.insert(flopwin::apply(m, r));
    if (moved != root_set) throw std::invalid_argument("Weyl generator does not permute the roots");
    std::map<Weight, long> image;
    for (const auto& [w, k] : psi) image[flopwin::apply(m, w)] += k;
    if (image != psi) throw std::invalid_argument("Weyl generator does not permute the weights");
  }
}

/// Quasi-symmetry: on every line through the origin the weights sum to zero.
inline bool is_quasi_symmetric(const GitPresentation& p) {
  std::map<IVec, IVec> line_sums;
  for (const auto& w : p.weights) {
    if (w.vec.is_zero()) continue;
    IVec dir = primitive_integer(to_rvec(w.vec.coords));
    auto first = std::find_if(dir.begin(), dir.end(), [](long x) { return x != 0; });
    if (*first < 0)
      for (auto& x : dir) x = -x;
    auto& acc = line_sums[dir];
    if (acc.empty()) acc.assign(w.vec.rank(), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w.mult * w.vec[i];
  }
  for (const auto& [dir, sum] : line_sums)
    if (gcd_of(sum) != 0) return false;
  return true;
}

/// Basis of the Weyl-fixed subspace of M_R, as primitive integer vectors in
/// reduced echelon order.
inline std::vector<IVec> weyl_invariant_basis(const GitPresentation& p) {
  const auto n = static_cast<std::size_t>(p.rank);
  linalg::Matrix rows;
  for (const auto& m : p.weyl) {
    for (std::size_t i = 0; i < n; ++i) {
      RVec r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = m[i][j] - (i == j ? 1 : 0);
      rows.push_back(std::move(r));
    }
  }
  auto basis = linalg::nullspace(rows, n);
  linalg::rref(basis);
  std::vector<IVec> out;
  for (const auto& b : basis) {
    IVec v = primitive_integer(b);
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (first != v.end() && *first < 0)
      for (auto& x : v) x = -x;
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<Weight> weyl_orbit(const Weight& w, const GitPresentation& p) {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& m : p.weyl) {
      Weight next = flopwin::apply(m, cur);
      if (seen.insert(next).second) {
        if (seen.size() > 100000) throw std::runtime_error("Weyl orbit too large");
        queue.push_back(next);
      }
    }
  }
  return {seen.rbegin(), seen.rend()};
}

struct DominantRep {
  Weight representative;
  std::vector<Weight> orbit;  // lexicographically decreasing
};

/// Lexicographically largest element of the Weyl orbit, with the orbit.
inline DominantRep dominant_representative(const Weight& w, const GitPresentation& p) {
  auto orbit = weyl_orbit(w, p);
  return {orbit.front(), orbit};
}

/// Cocharacters in N^- : coordinates weakly decreasing (upper-triangular Borel).
inline bool is_antidominant(const Cocharacter& l) {
  for (std::size_t i = 1; i < l.rank(); ++i)
    if (l[i - 1] < l[i]) return false;
  return true;
}

/// The length-2 universal flop presentation V + V* + Sym^2 V(-1)^2 of GL2.
inline GitPresentation universal_flop_length2() {
  GitPresentation p;
  p.rank = 2;
  p.roots = {Weight{1, -1}, Weight{-1, 1}};
  p.weights = {{Weight{1, 0}, 1},  {Weight{0, 1}, 1},  {Weight{-1, 0}, 1}, {Weight{0, -1}, 1},
               {Weight{1, -1}, 2}, {Weight{0, 0}, 2},  {Weight{-1, 1}, 2}};
  p.weyl = {IMatrix{{0, 1}, {1, 0}}};
  return p;
}

/// The Atiyah flop (length 1) as a rank-1 quotient with weights 1,1,-1,-1.
inline GitPresentation conifold() {
  GitPresentation p;
  p.rank = 1;
  p.weights = {{Weight{1}, 2}, {Weight{-1}, 2}};
  return p;
}

}  // namespace flopwin
