#pragma once

// Window bookkeeping on the invariant line: lattice points of translated
// copies of ∇̄, their Weyl-orbit tables, the facet subgroups μ_F, the ν_ε
// filter and the generator pairs of the kernel categories K_j.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flopwin/lattice.hpp"
#include "flopwin/zonotope.hpp"

namespace flopwin {

namespace detail {

inline std::string superscript(long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = n < 0 ? "⁻" : "";
  std::string dec = std::to_string(n < 0 ? -n : n);
  for (char c : dec) s += digits[c - '0'];
  return s;
}

inline std::string signed_int(long n) { return n < 0 ? "−" + std::to_string(-n) : std::to_string(n); }

inline bool is_gl2(const GitPresentation& p) {
  return p.rank == 2 && p.weyl.size() == 1 && p.weyl[0] == IMatrix{{0, 1}, {1, 0}};
}

inline RVec along(const IVec& v, const Rational& s) {
  RVec out;
  for (long x : v) out.push_back(s * x);
  return out;
}

}  // namespace detail

/// Dominant (a+i, i) renders as Sym^a V(i); rank 1 as O(k).
inline std::string weight_name(const Weight& w, const GitPresentation& p) {
  if (p.rank == 1) return w[0] == 0 ? "O" : "O(" + detail::signed_int(w[0]) + ")";
  if (detail::is_gl2(p) && w[0] >= w[1]) {
    long a = w[0] - w[1], i = w[1];
    std::string base = a == 0 ? "O" : a == 1 ? "V" : "Sym" + detail::superscript(a) + "V";
    if (i != 0) base += "(" + detail::signed_int(i) + ")";
    return base;
  }
  std::string s = "χ(";
  for (std::size_t k = 0; k < w.rank(); ++k) s += (k ? "," : "") + detail::signed_int(w[k]);
  return s + ")";
}

/// All m ∈ M with m − δ ∈ z (closed).
inline std::vector<Weight> lattice_points(const RVec& delta, const Zonotope& z) {
  const std::size_t n = delta.size();
  if (static_cast<long>(n) != z.rank) throw DimensionError("translation has wrong length");
  std::vector<Weight> out;
  if (z.vertices.empty()) return out;
  IVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = z.vertices[0][i], mx = z.vertices[0][i];
    for (const auto& v : z.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = to_long(floor_div_frac(Rational(mn + delta[i])).get_num());
    hi[i] = to_long(floor_div_frac(Rational(mx + delta[i])).get_num()) + 1;
  }
  IVec cur = lo;
  for (;;) {
    RVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = cur[i] - delta[i];
    if (z.contains(x)) out.emplace_back(cur);
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (++cur[k] <= hi[k]) break;
      cur[k] = lo[k];
    }
    if (k == n) break;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Lattice points lying on the boundary of δ + z.
inline std::vector<Weight> boundary_lattice_points(const RVec& delta, const Zonotope& z) {
  std::vector<Weight> out;
  for (const auto& m : lattice_points(delta, z)) {
    RVec x(delta.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = m[i] - delta[i];
    if (z.on_boundary(x)) out.push_back(m);
  }
  return out;
}

struct WindowGenerator {
  Weight dominant;
  long orbit_size = 1;
  std::string name;
  auto operator<=>(const WindowGenerator& o) const { return dominant <=> o.dominant; }
  bool operator==(const WindowGenerator& o) const { return dominant == o.dominant; }
};

struct WindowSpec {
  FaceRef face;
  std::vector<WindowGenerator> generators;
  std::vector<Weight> points;
  std::string label;

  std::set<std::string> names() const {
    std::set<std::string> s;
    for (const auto& g : generators) s.insert(g.name);
    return s;
  }
};

inline std::vector<WindowGenerator> group_orbits(const std::vector<Weight>& pts, const GitPresentation& p) {
  std::set<Weight> all(pts.begin(), pts.end());
  std::map<Weight, long> reps;
  for (const auto& m : pts) {
    auto d = dominant_representative(m, p);
    for (const auto& o : d.orbit)
      if (!all.count(o)) throw std::logic_error("lattice point set is not Weyl-stable");
    reps[d.representative] = static_cast<long>(d.orbit.size());
  }
  std::vector<WindowGenerator> gens;
  for (const auto& [w, k] : reps) gens.push_back({w, k, weight_name(w, p)});
  // twist first, then symmetric power
  std::sort(gens.begin(), gens.end(), [](const WindowGenerator& a, const WindowGenerator& b) {
    auto key = [](const Weight& w) {
      long last = w.coords.back();
      return std::make_pair(last, w.coords.front() - last);
    };
    return key(a.dominant) < key(b.dominant);
  });
  return gens;
}

inline std::string render_label(const std::vector<WindowGenerator>& gens) {
  std::string s = "⟨";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].name;
  return s + "⟩";
}

/// The window W_j for an interval face C_j: characters in δ + ∇̄ for δ in C_j.
inline WindowSpec window(const GitPresentation& p, const FaceRef& face) {
  if (face.kind != FaceKind::Interval) throw std::invalid_argument("window needs an interval face C:j");
  const auto d = skms(p);
  const Zonotope z = nabla(p);
  auto [a, b] = interval_C(d, face.index);
  const RVec mid = detail::along(d.invariant_direction, (a + b) / 2);
  if (!boundary_lattice_points(mid, z).empty())
    throw std::logic_error("interior point of " + face.str() + " has lattice points on the boundary");
  const auto ref = lattice_points(mid, z);
  for (Rational f : {frac(1, 4), frac(3, 4)})
    if (lattice_points(detail::along(d.invariant_direction, a + f * (b - a)), z) != ref)
      throw std::logic_error("lattice points vary inside " + face.str());
  WindowSpec w;
  w.face = face;
  w.points = ref;
  w.generators = group_orbits(ref, p);
  w.label = render_label(w.generators);
  return w;
}

/// The larger category E_{D_j}: characters in the closed polytope D_j + ∇̄.
inline WindowSpec big_window(const GitPresentation& p, const FaceRef& face) {
  if (face.kind != FaceKind::Point) throw std::invalid_argument("big_window needs a point face D:j");
  const auto d = skms(p);
  const Zonotope z = nabla(p);
  WindowSpec w;
  w.face = face;
  w.points = lattice_points(detail::along(d.invariant_direction, point_D(d, face.index)), z);
  w.generators = group_orbits(w.points, p);
  w.label = render_label(w.generators);
  return w;
}

/// Facets of z containing the point x.
inline std::vector<HalfSpace> facets_containing(const Zonotope& z, const RVec& x) {
  std::vector<HalfSpace> out;
  for (const auto& h : z.halfspaces)
    if (pair(h.normal, x) == h.bound) out.push_back(h);
  return out;
}

/// Primitive inner normal of the facet of z with the given outer normal.
inline Cocharacter mu_F(const Zonotope& z, const Cocharacter& outer_normal) {
  for (const auto& h : z.halfspaces) {
    if (h.normal != outer_normal) continue;
    std::size_t on = 0;
    for (const auto& v : z.vertices)
      if (pair(h.normal, v) == h.bound) ++on;
    if (static_cast<long>(on) < z.rank) break;
    return -h.normal;
  }
  throw std::invalid_argument("not a facet normal of the polytope");
}

inline bool nu_filter(const RVec& eps, const Cocharacter& l) {
  return is_antidominant(l) && pair(l, eps) > 0;
}

struct KappaGenerator {
  Weight character;
  Cocharacter subgroup;
  std::string canonical_name;
  auto operator<=>(const KappaGenerator& o) const {
    if (auto c = character <=> o.character; c != 0) return c;
    return subgroup <=> o.subgroup;
  }
  bool operator==(const KappaGenerator& o) const {
    return character == o.character && subgroup == o.subgroup;
  }
};

/// B-weight (a, b) as the line bundle L^a Q^b = Q^{b−a} D^a on P(V).
inline std::string pv_line_name(const Weight& chi) {
  long q = chi[1] - chi[0], dd = chi[0];
  std::string s;
  auto part = [&](const char* sym, long e) {
    if (e == 0) return;
    s += sym;
    if (e != 1) s += detail::superscript(e);
  };
  part("Q", q);
  part("D", dd);
  return s.empty() ? "O" : s;
}

inline std::string kappa_name(const Weight& chi, const Cocharacter& l, const GitPresentation& p) {
  if (detail::is_gl2(p)) {
    if (l[0] == l[1] && l[0] != 0)
      return "O_S0(" + weight_name(dominant_representative(chi, p).representative, p) + ")";
    if ((l[0] == 0) != (l[1] == 0)) return "σ_*O_S̃1(" + pv_line_name(chi) + ")";
  }
  std::string s = "σ_*O_S[";
  for (std::size_t k = 0; k < l.rank(); ++k) s += (k ? "," : "") + detail::signed_int(l[k]);
  return s + "](" + weight_name(chi, p) + ")";
}

/// Generator pairs (χ, λ) of K for the wall D between the chambers C and the
/// adjacent interval on the other side.
inline std::vector<KappaGenerator> kappa_generators(const GitPresentation& p, const FaceRef& dref,
                                                    const FaceRef& cref) {
  if (dref.kind != FaceKind::Point || cref.kind != FaceKind::Interval)
    throw std::invalid_argument("kappa_generators takes a point face D:j and an interval face C:k");
  if (cref.index != dref.index && cref.index != dref.index + 1)
    throw std::invalid_argument(dref.str() + " is not in the closure of " + cref.str());
  const auto d = skms(p);
  const Zonotope z = nabla(p);
  const IVec& v = d.invariant_direction;
  const Rational dpos = point_D(d, dref.index);
  auto [a, b] = interval_C(d, cref.index);
  const Rational mid = (a + b) / 2;
  const RVec delta_d = detail::along(v, dpos);
  const Zonotope zd = z.translated(delta_d);
  const RVec eps = detail::along(v, mid - dpos);

  auto in_d = lattice_points(delta_d, z);
  auto in_c = lattice_points(detail::along(v, mid), z);
  std::set<Weight> c_set(in_c.begin(), in_c.end());
  std::set<KappaGenerator> out;
  for (const auto& chi : in_d) {
    if (c_set.count(chi)) continue;
    for (const auto& h : facets_containing(zd, to_rvec(chi.coords))) {
      Cocharacter l = mu_F(zd, h.normal);
      if (nu_filter(eps, l)) out.insert({chi, l, kappa_name(chi, l, p)});
    }
  }
  return {out.begin(), out.end()};
}

/// Formal complex F_n → … → F_0 of sums of irreducibles by highest weight;
/// terms are listed left to right, so the last entry is F_0.
struct Resolution {
  std::vector<std::map<Weight, long>> terms;
};

struct KTheoryClass {
  std::map<Weight, long> coefficients;  // zero entries dropped

  bool operator==(const KTheoryClass&) const = default;
  long operator[](const Weight& w) const {
    auto it = coefficients.find(w);
    return it == coefficients.end() ? 0 : it->second;
  }
  IVec over(const std::vector<Weight>& basis) const {
    IVec out;
    for (const auto& w : basis) out.push_back((*this)[w]);
    return out;
  }
};

inline KTheoryClass k_class(const Resolution& r) {
  KTheoryClass k;
  const std::size_t n = r.terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    long sign = ((n - 1 - i) % 2 == 0) ? 1 : -1;
    for (const auto& [w, m] : r.terms[i]) k.coefficients[w] += sign * m;
  }
  std::erase_if(k.coefficients, [](const auto& kv) { return kv.second == 0; });
  return k;
}

}  // namespace flopwin
