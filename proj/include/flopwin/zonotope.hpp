#pragma once

// The polytope of characters |<λ,χ>| <= η_λ/2, its periodic facet
// arrangement, and the trace of that arrangement on the Weyl-invariant line.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flopwin/lattice.hpp"
#include "flopwin/linalg.hpp"
#include "flopwin/lp.hpp"

namespace flopwin {

class UnboundedPolytope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// <normal, χ> <= bound
struct HalfSpace {
  Cocharacter normal;
  Rational bound;
  bool operator==(const HalfSpace& o) const { return normal == o.normal && bound == o.bound; }
};

struct Zonotope {
  long rank = 0;
  std::vector<HalfSpace> halfspaces;  // irredundant
  std::vector<RVec> vertices;
  bool quasi_symmetric = true;

  bool contains(const RVec& x) const {
    for (const auto& h : halfspaces)
      if (pair(h.normal, x) > h.bound) return false;
    return true;
  }
  bool on_boundary(const RVec& x) const {
    if (!contains(x)) return false;
    for (const auto& h : halfspaces)
      if (pair(h.normal, x) == h.bound) return true;
    return false;
  }
  /// δ + this
  Zonotope translated(const RVec& delta) const {
    Zonotope z = *this;
    for (auto& h : z.halfspaces) h.bound += pair(h.normal, delta);
    for (auto& v : z.vertices)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += delta[i];
    return z;
  }
};

/// η_λ = Σ_Φ min(0,<λ,α>) − Σ_Ψ min(0,<λ,β>)
inline long eta(const GitPresentation& p, const Cocharacter& l) {
  if (static_cast<long>(l.rank()) != p.rank) throw DimensionError("cocharacter rank mismatch");
  long s = 0;
  for (const auto& r : p.roots) s += std::min(0L, pair(l, r));
  for (const auto& w : p.weights) s -= w.mult * std::min(0L, pair(l, w.vec));
  return s;
}

namespace detail {

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

inline IVec sign_normalized(IVec v) {
  auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (auto& x : v) x = -x;
  return v;
}

/// Primitive generators of the rays of the fan cut out by the hyperplanes
/// orthogonal to the given normals (both orientations of every ray).
inline std::vector<Cocharacter> fan_rays(const std::vector<IVec>& normals, std::size_t rank) {
  std::set<Cocharacter> rays;
  for_each_subset(normals.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix rows;
    for (auto i : idx) rows.push_back(to_rvec(normals[i]));
    auto ns = linalg::nullspace(rows, rank);
    if (ns.size() != 1) return;
    IVec g = primitive_integer(ns[0]);
    rays.insert(Cocharacter(g));
    for (auto& x : g) x = -x;
    rays.insert(Cocharacter(g));
  });
  return {rays.rbegin(), rays.rend()};
}

inline std::vector<RVec> enumerate_vertices(const std::vector<HalfSpace>& hs, std::size_t rank) {
  std::set<RVec> verts;
  for_each_subset(hs.size(), rank, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix a;
    RVec b;
    for (auto i : idx) {
      a.push_back(to_rvec(hs[i].normal.coords));
      b.push_back(hs[i].bound);
    }
    RVec x;
    if (!linalg::solve(a, b, x)) return;
    for (const auto& h : hs)
      if (pair(h.normal, x) > h.bound) return;
    verts.insert(x);
  });
  return {verts.rbegin(), verts.rend()};
}

}  // namespace detail

/// Builds a polytope from an explicit (possibly redundant) H-description:
/// redundancy is removed by exact LP and the vertices enumerated.
inline Zonotope polytope_from_halfspaces(std::vector<HalfSpace> candidates, long rank) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<HalfSpace> uniq;
  for (auto& h : candidates)
    if (std::find(uniq.begin(), uniq.end(), h) == uniq.end()) uniq.push_back(std::move(h));

  auto lp_max = [&](const Cocharacter& dir, const std::vector<HalfSpace>& cons) {
    linalg::Matrix a;
    RVec b;
    for (const auto& h : cons) {
      a.push_back(to_rvec(h.normal.coords));
      b.push_back(h.bound);
    }
    return lp::maximize(to_rvec(dir.coords), a, b);
  };

  std::vector<bool> keep(uniq.size(), true);
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<HalfSpace> others;
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i && keep[j]) others.push_back(uniq[j]);
    auto r = lp_max(uniq[i].normal, others);
    if (!r.unbounded && r.value <= uniq[i].bound) keep[i] = false;
  }
  Zonotope z;
  z.rank = rank;
  for (std::size_t i = 0; i < uniq.size(); ++i)
    if (keep[i]) z.halfspaces.push_back(uniq[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (long s : {1L, -1L}) {
      IVec e(n, 0);
      e[i] = s;
      if (lp_max(Cocharacter(e), z.halfspaces).unbounded)
        throw UnboundedPolytope("polytope is unbounded along coordinate " + std::to_string(i));
    }
  }
  std::sort(z.halfspaces.begin(), z.halfspaces.end(),
            [](const HalfSpace& a, const HalfSpace& b) { return a.normal > b.normal; });
  z.vertices = detail::enumerate_vertices(z.halfspaces, n);
  return z;
}

/// The polytope ∇̄ of the presentation. Candidate one-parameter subgroups are
/// the rays of the fan on which η is piecewise linear.
inline Zonotope nabla(const GitPresentation& p) {
  const auto n = static_cast<std::size_t>(p.rank);
  std::set<IVec> normals;
  auto add = [&](const Weight& w) {
    if (w.is_zero()) return;
    normals.insert(detail::sign_normalized(primitive_integer(to_rvec(w.coords))));
  };
  for (const auto& r : p.roots) add(r);
  for (const auto& w : p.weights) add(w.vec);
  // Coordinate hyperplanes refine the fan so every cone is pointed.
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    normals.insert(e);
  }
  std::vector<IVec> nvec(normals.begin(), normals.end());
  std::vector<HalfSpace> cand;
  for (const auto& l : detail::fan_rays(nvec, n)) cand.push_back({l, frac(eta(p, l), 2)});
  Zonotope z = polytope_from_halfspaces(std::move(cand), p.rank);
  z.quasi_symmetric = is_quasi_symmetric(p);
  return z;
}

/// Parallel translates m − H of one facet hyperplane <normal, χ> = offset + k.
struct HyperplaneFamily {
  Cocharacter normal;          // first nonzero coordinate positive
  std::set<Rational> offsets;  // in [0, 1)
};

inline std::vector<HyperplaneFamily> arrangement(const Zonotope& z) {
  std::map<Cocharacter, std::set<Rational>> fams;
  for (const auto& h : z.halfspaces) {
    Cocharacter n(detail::sign_normalized(h.normal.coords));
    Rational b = (n == h.normal) ? h.bound : Rational(-h.bound);
    fams[n].insert(mod1(Rational(-b)));
  }
  std::vector<HyperplaneFamily> out;
  for (auto it = fams.rbegin(); it != fams.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

struct SKMSDescriptor {
  std::set<Rational> puncture_residues;  // in [0, 1)
  long equatorial_count = 0;
  Rational translation_generator = 1;
  IVec invariant_direction;  // primitive generator of the invariant line
};

inline bool has_nonzero_weights(const GitPresentation& p) {
  for (const auto& r : p.roots)
    if (!r.is_zero()) return true;
  for (const auto& w : p.weights)
    if (!w.vec.is_zero()) return true;
  return false;
}

inline SKMSDescriptor skms(const GitPresentation& p) {
  auto basis = weyl_invariant_basis(p);
  if (basis.size() != 1)
    throw Unsupported("SKMS needs a one-dimensional Weyl-invariant subspace, got dimension " +
                      std::to_string(basis.size()));
  SKMSDescriptor d;
  d.invariant_direction = basis[0];
  if (!has_nonzero_weights(p)) return d;
  const Zonotope z = nabla(p);
  const RVec v = to_rvec(basis[0]);
  for (const auto& fam : arrangement(z)) {
    Rational q = pair(fam.normal, v);
    if (q == 0) {
      if (fam.offsets.count(Rational(0)))
        throw Unsupported("invariant line lies inside the hyperplane arrangement");
      continue;
    }
    // q is an integer (integral normal, integral v): |q| translates cover [0, 1)
    const long steps = to_long(Integer(abs(q)));
    for (const auto& o : fam.offsets)
      for (long k = 0; k < steps; ++k) d.puncture_residues.insert(mod1(Rational((o + k) / q)));
  }
  d.equatorial_count = static_cast<long>(d.puncture_residues.size());
  return d;
}

/// Puncture P_i on the invariant line (parameter along the primitive
/// invariant vector); P_0 is the smallest puncture >= 0.
inline Rational puncture_point(const SKMSDescriptor& d, long i) {
  if (d.equatorial_count == 0) throw Unsupported("no punctures on the invariant line");
  const long n = d.equatorial_count;
  std::vector<Rational> r(d.puncture_residues.begin(), d.puncture_residues.end());
  long q = i >= 0 ? i / n : -((-i + n - 1) / n);
  long rem = i - q * n;
  return r[static_cast<std::size_t>(rem)] + q;
}

enum class FaceKind { Interval, Point };

/// "C:j" (open interval C_j) or "D:j" (point D_j).
struct FaceRef {
  FaceKind kind = FaceKind::Interval;
  long index = 0;

  static FaceRef parse(const std::string& s) {
    if (s.size() < 3 || s[1] != ':' || (s[0] != 'C' && s[0] != 'D'))
      throw std::invalid_argument("face reference must look like C:j or D:j, got '" + s + "'");
    FaceRef f;
    f.kind = s[0] == 'C' ? FaceKind::Interval : FaceKind::Point;
    std::size_t used = 0;
    f.index = std::stol(s.substr(2), &used);
    if (used != s.size() - 2) throw std::invalid_argument("bad face index in '" + s + "'");
    return f;
  }
  std::string str() const { return std::string(kind == FaceKind::Interval ? "C:" : "D:") + std::to_string(index); }
  auto operator<=>(const FaceRef&) const = default;
};

inline Rational point_D(const SKMSDescriptor& d, long j) { return puncture_point(d, j + 1); }
inline std::pair<Rational, Rational> interval_C(const SKMSDescriptor& d, long j) {
  return {puncture_point(d, j), puncture_point(d, j + 1)};
}

struct FacePoset {
  std::vector<std::pair<long, Rational>> points;                       // (j, D_j)
  std::vector<std::pair<long, std::pair<Rational, Rational>>> intervals;  // (j, C_j)
  std::vector<std::pair<std::pair<long, long>, long>> adjacency;        // (C_j, C_{j+1}) -> D_j
};

/// Points D_j for j in [jmin, jmax] and the intervals C_j between them.
inline FacePoset face_poset(const GitPresentation& p, long jmin, long jmax) {
  FacePoset fp;
  const auto d = skms(p);
  if (d.equatorial_count == 0 || jmin > jmax) return fp;
  for (long j = jmin; j <= jmax; ++j) fp.points.push_back({j, point_D(d, j)});
  for (long j = jmin + 1; j <= jmax; ++j) fp.intervals.push_back({j, interval_C(d, j)});
  for (long j = jmin + 1; j < jmax; ++j) fp.adjacency.push_back({{j, j + 1}, j});
  return fp;
}

}  // namespace flopwin
