#pragma once

// Equivariant line bundles on P(V) (L tautological, Q = L⁻¹D), their
// cohomology as GL2 representations, the section counts on S̃0 ∩ S̃1, the
// dual Koszul complex of S̃1, and the two locally free resolutions.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flopwin/characters.hpp"
#include "flopwin/lattice.hpp"
#include "flopwin/windows.hpp"

namespace flopwin::coh {

/// L^a Q^b. The B-weight of L^a Q^b is (a, b).
struct Line {
  long a = 0, b = 0;
  static Line QD(long q, long d) { return {d, q + d}; }  // Q^q D^d
  long q_exp() const { return b - a; }
  long d_exp() const { return a; }
  long degree() const { return b - a; }  // O(1) = Q on P^1
  Line operator*(const Line& o) const { return {a + o.a, b + o.b}; }
  Line pow(long n) const { return {a * n, b * n}; }
  auto operator<=>(const Line&) const = default;
};

inline std::string line_name(const Line& l) { return pv_line_name(Weight{l.a, l.b}); }

/// Formal combination of W ⊗ L^a Q^b.
using PVBundle = std::map<std::pair<Irrep, Line>, long>;

struct PVCohomology {
  std::map<Irrep, long> h0, h1;
};

/// H⁰(L^aQ^b) = Sym^{b−a}V ⊗ D^a (b ≥ a), H¹ = Sym^{a−b−2}V ⊗ D^{b+1} (b − a ≤ −2).
inline PVCohomology pv_cohomology(const Line& l) {
  PVCohomology c;
  if (l.b >= l.a) c.h0[Irrep(l.b, l.a)] = 1;
  if (l.b - l.a <= -2) c.h1[Irrep(l.a - 1, l.b + 1)] = 1;
  return c;
}

inline PVCohomology pv_cohomology(const PVBundle& bundle) {
  Character h0, h1;
  for (const auto& [key, m] : bundle) {
    const auto& [w, l] = key;
    auto c = pv_cohomology(l);
    h0 += (irrep_character(w) * character_of(c.h0)).scaled(m);
    h1 += (irrep_character(w) * character_of(c.h1)).scaled(m);
  }
  return {decompose(h0), decompose(h1)};
}

/// Summand of a bundle on P(V): external representation times a line.
struct Summand {
  Irrep rep;
  Line line;
  long mult = 1;
};

/// Degree-n pieces of Sym^•(⊕ summands) as combinations of W ⊗ line.
inline std::vector<std::map<Line, Character>> sym_on_pv(const std::vector<Summand>& sums, long d) {
  std::vector<std::map<Line, Character>> g(static_cast<std::size_t>(d) + 1);
  g[0][Line{}] = Character::monomial(0, 0);
  for (const auto& s : sums) {
    const GradedRep sw = sym_series(irrep_character(s.rep), d);
    for (long copy = 0; copy < s.mult; ++copy) {
      std::vector<std::map<Line, Character>> next(g.size());
      for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& [l, ch] : g[k])
          for (std::size_t n = 0; k + n < g.size(); ++n) next[k + n][l * s.line.pow(static_cast<long>(n))] += ch * sw[n];
      g = std::move(next);
    }
  }
  return g;
}

/// H⁰ and H¹ of twist ⊗ Sym^n(⊕ summands) on P(V), as GL2 characters per n.
struct SectionSeries {
  GradedRep h0, h1;
};

inline SectionSeries sections(const Line& twist, const std::vector<Summand>& sums, long d) {
  SectionSeries s;
  for (const auto& piece : sym_on_pv(sums, d)) {
    Character h0, h1;
    for (const auto& [l, ch] : piece) {
      auto c = pv_cohomology(l * twist);
      h0 += ch * character_of(c.h0);
      h1 += ch * character_of(c.h1);
    }
    s.h0.push_back(std::move(h0));
    s.h1.push_back(std::move(h1));
  }
  return s;
}

/// Functions on S̃0 ∩ S̃1 = Tot(O² ⊕ (Q⁻²D)² ⊕ V*) over P(V).
inline const std::vector<Summand>& intersection_functions() {
  static const std::vector<Summand> s = {{O(), Line{}, 2}, {O(), Line::QD(2, -1), 2}, {V(), Line{}, 1}};
  return s;
}

/// Multiplicity of W in Γ(P(V), twist ⊗ Sym^•(O² ⊕ (Q²D⁻¹)² ⊕ V)), degrees 0..d.
inline std::vector<long> intersection_multiplicity(const Irrep& w, const Line& twist, long d) {
  auto s = sections(twist, intersection_functions(), d);
  for (const auto& h : s.h1)
    if (!h.is_zero()) throw std::logic_error("unexpected higher cohomology on P(V)");
  return multiplicity(w, s.h0);
}

struct SemiorthogonalityReport {
  std::vector<long> final_term;   // V* in Γ(Q ⊗ Sym^•…)
  std::vector<long> middle_term;  // V* in Γ(Sym^•…)
  bool vanishes = true;
};

inline SemiorthogonalityReport verify_semiorthogonality(long d) {
  SemiorthogonalityReport r;
  r.final_term = intersection_multiplicity(Vstar(), Line::QD(1, 0), d);
  r.middle_term = intersection_multiplicity(Vstar(), Line{}, d);
  for (long x : r.final_term) r.vanishes = r.vanishes && x == 0;
  for (long x : r.middle_term) r.vanishes = r.vanishes && x == 0;
  return r;
}

/// Polynomial matrix entries in the commuting symbols s_β, s_γ: exponents → coefficient.
using SPoly = std::map<std::pair<long, long>, long>;
using SMatrix = std::vector<std::vector<SPoly>>;

inline SPoly s_beta(long c = 1) { return {{{1, 0}, c}}; }
inline SPoly s_gamma(long c = 1) { return {{{0, 1}, c}}; }

/// Row-vector convention: v ↦ v·M.
inline SMatrix multiply(const SMatrix& a, const SMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  SMatrix c(n, std::vector<SPoly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix shapes do not compose");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (const auto& [e1, c1] : a[i][l])
          for (const auto& [e2, c2] : b[l][j]) {
            auto& x = c[i][j][{e1.first + e2.first, e1.second + e2.second}];
            x += c1 * c2;
            if (x == 0) c[i][j].erase({e1.first + e2.first, e1.second + e2.second});
          }
  }
  return c;
}

inline bool is_zero(const SMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.empty()) return false;
  return true;
}

/// Exterior powers of a sum of lines, as multisets of lines.
inline std::vector<std::map<Line, long>> exterior_powers(const std::vector<Line>& lines) {
  std::vector<std::map<Line, long>> out(lines.size() + 1);
  const std::size_t n = lines.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Line l{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        l = l * lines[i];
        ++k;
      }
    out[k][l] += 1;
  }
  return out;
}

struct DualKoszul {
  std::vector<std::vector<Line>> terms;  // O → E → Λ²E → Λ³E with summands in matrix order
  std::array<SMatrix, 3> maps;
  bool is_complex = false;
  bool homogeneous = false;  // every entry has the weight of s_β, s_γ (Q²D⁻¹)
  bool terms_match_exterior = false;
};

/// Hom(−, O_S̃0) applied to the Koszul resolution of S̃1 (E = (Q²D⁻¹)² ⊕ Q).
inline DualKoszul dual_koszul() {
  DualKoszul k;
  const Line q = Line::QD(1, 0), q2d = Line::QD(2, -1);
  k.terms = {{Line{}}, {q2d, q2d, q}, {Line::QD(3, -1), Line::QD(3, -1), Line::QD(4, -2)}, {Line::QD(5, -2)}};
  k.maps[0] = {{s_beta(), s_gamma(), {}}};
  k.maps[1] = {{{}, {}, s_gamma()}, {{}, {}, s_beta(-1)}, {s_beta(-1), s_gamma(-1), {}}};
  k.maps[2] = {{s_gamma(-1)}, {s_beta()}, {{}}};
  k.is_complex = is_zero(multiply(k.maps[0], k.maps[1])) && is_zero(multiply(k.maps[1], k.maps[2]));
  k.homogeneous = true;
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t i = 0; i < k.maps[m].size(); ++i)
      for (std::size_t j = 0; j < k.maps[m][i].size(); ++j)
        for (const auto& [e, c] : k.maps[m][i][j]) {
          Line w = q2d.pow(e.first + e.second);
          if (k.terms[m][i] * w != k.terms[m + 1][j]) k.homogeneous = false;
        }
  auto ext = exterior_powers({q2d, q2d, q});
  k.terms_match_exterior = true;
  for (std::size_t p = 0; p < 4; ++p) {
    std::map<Line, long> ms;
    for (const auto& l : k.terms[p]) ms[l] += 1;
    if (ms != ext[p]) k.terms_match_exterior = false;
  }
  return k;
}

struct Ext1Report {
  std::vector<long> dims;          // Ext¹(F, G) by internal degree
  std::vector<long> degree3;       // V* in Γ(Q²D⁻¹ ⊗ Sym^•…), must vanish
  bool canonical_twist_ok = false;  // ω_σ = Q⁻¹ ⊗ L = Q⁻²D, and V ⊗ ω_σ ⊗ Q⁻¹ = V ⊗ Q⁻³D
  bool koszul_ok = false;
};

inline Ext1Report ext1_FG_dims(long d) {
  Ext1Report r;
  const Line L{1, 0}, Q = Line::QD(1, 0);
  const Line omega = Q.pow(-1) * L;
  r.canonical_twist_ok = omega == Line::QD(-2, 1) && omega * Q.pow(-1) == Line::QD(-3, 1);
  auto k = dual_koszul();
  r.koszul_ok = k.is_complex && k.homogeneous && k.terms_match_exterior;
  // After the twist by V ⊗ Q⁻³D: degree-2 term lives on Λ²E ⊗ Q⁻³D ∋ Q³D⁻¹ ⊗ Q⁻³D … reduced to Γ(V ⊗ QD⁻¹);
  // degree-3 term Q⁵D⁻² ⊗ Q⁻³D = Q²D⁻¹.
  const Line top = k.terms[3][0] * Line::QD(-3, 1);
  r.degree3 = intersection_multiplicity(Vstar(), top, d);
  r.dims = intersection_multiplicity(Vstar(), Line::QD(1, -1), d);
  return r;
}

/// Γ-invariants of O_{P¹}(k) on the chart (b00, c00, b01, c01, p) with weights (0,0,−1,−1,0).
inline std::vector<long> e2_sections(long d, long k) {
  const std::array<long, 5> wts{0, 0, -1, -1, 0};
  // count monomials of total degree n and weight −k
  std::vector<std::map<long, long>> c(static_cast<std::size_t>(d) + 1);
  c[0][0] = 1;
  for (long w : wts)
    for (std::size_t n = 1; n < c.size(); ++n)
      for (const auto& [x, m] : c[n - 1]) c[n][x + w] += m;
  std::vector<long> out;
  for (const auto& m : c) {
    auto it = m.find(-k);
    out.push_back(it == m.end() ? 0 : it->second);
  }
  return out;
}

/// Weights of a GL2 character restricted along a cocharacter, as λ-weight → multiplicity.
inline std::map<long, long> restrict_along(const Character& c, const Cocharacter& l) {
  std::map<long, long> out;
  for (const auto& [w, m] : c.terms) {
    long x = l[0] * w.first + l[1] * w.second;
    out[x] += m;
    if (out[x] == 0) out.erase(x);
  }
  return out;
}

struct ResolutionTerms {
  Resolution downstairs;                    // F_n … F_0, left to right
  std::vector<std::map<Line, long>> upstairs;  // twisted Koszul terms on the P(V)-bundle, same order
};

inline std::map<Weight, long> as_weights(const std::map<Irrep, long>& m) {
  std::map<Weight, long> out;
  for (const auto& [r, k] : m)
    if (k != 0) out[Weight{r.p, r.q}] += k;
  return out;
}

/// Pushes a complex of lines on P(V) down: position p receives H⁰(F_p) ⊕ H¹(F_{p+1}).
inline Resolution push_down(const std::vector<std::map<Line, long>>& upstairs) {
  const std::size_t n = upstairs.size();
  std::vector<Character> pos(n);  // indexed by homological degree
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hdeg = n - 1 - i;
    for (const auto& [l, m] : upstairs[i]) {
      auto c = pv_cohomology(l);
      pos[hdeg] += character_of(c.h0).scaled(m);
      if (hdeg > 0) pos[hdeg - 1] += character_of(c.h1).scaled(m);
      else if (!c.h1.empty()) throw std::logic_error("H¹ in homological degree 0");
    }
  }
  Resolution r;
  while (!pos.empty() && pos.back().is_zero()) pos.pop_back();
  for (std::size_t h = pos.size(); h-- > 0;) r.terms.push_back(as_weights(decompose(pos[h])));
  return r;
}

inline ResolutionTerms resolution_terms(const std::string& name) {
  ResolutionTerms t;
  if (name == "resG") {
    // Koszul resolution O(−1) → V* → O of O_S0, tensored with V
    for (const Irrep& k : {Irrep(-1, -1), Vstar(), O()})
      t.downstairs.terms.push_back(as_weights(decompose(irrep_character(k) * irrep_character(V()))));
    return t;
  }
  if (name == "resF") {
    // Koszul complex of E = Q ⊕ (Q²D⁻¹)², dualized terms Λ^k E^∨, twisted by Q
    const Line q = Line::QD(1, 0);
    auto ext = exterior_powers({q, Line::QD(2, -1), Line::QD(2, -1)});
    for (std::size_t k = ext.size(); k-- > 0;) {
      std::map<Line, long> term;
      for (const auto& [l, m] : ext[k]) term[l.pow(-1) * q] += m;
      t.upstairs.push_back(std::move(term));
    }
    t.downstairs = push_down(t.upstairs);
    return t;
  }
  throw std::invalid_argument("unknown resolution '" + name + "' (expected resF or resG)");
}

}  // namespace flopwin::coh
