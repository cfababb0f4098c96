#pragma once

// GL2 characters as Laurent polynomials in x1, x2 (exponent pair → coefficient),
// irreducible decomposition by highest-weight subtraction, and truncated
// symmetric algebras.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flopwin::coh {

/// Highest weight (p, q) with p ≥ q.
struct Irrep {
  long p = 0, q = 0;
  Irrep() = default;
  Irrep(long p_, long q_) : p(p_), q(q_) {
    if (p < q) throw std::invalid_argument("irrep highest weight needs p >= q");
  }
  auto operator<=>(const Irrep&) const = default;
  long dim() const { return p - q + 1; }
};

inline Irrep O() { return {0, 0}; }
inline Irrep V() { return {1, 0}; }
inline Irrep Vstar() { return {0, -1}; }
inline Irrep D() { return {1, 1}; }
inline Irrep S2Vm1() { return {1, -1}; }

/// Sym^a V(i) naming, matching the window tables.
inline std::string irrep_name(const Irrep& r) {
  long a = r.p - r.q, i = r.q;
  std::string s = a == 0 ? "O" : a == 1 ? "V" : "Sym^" + std::to_string(a) + "V";
  if (i != 0) s += "(" + std::to_string(i) + ")";
  return s;
}

/// "V", "Vstar", "D", "O", "S2Vm1", or an explicit "p,q".
inline Irrep parse_irrep(const std::string& text) {
  if (text == "V") return V();
  if (text == "Vstar" || text == "V*") return Vstar();
  if (text == "D") return D();
  if (text == "O") return O();
  if (text == "S2Vm1") return S2Vm1();
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("unknown representation '" + text + "'");
  std::size_t used = 0;
  long p = std::stol(text.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("bad irrep label '" + text + "'");
  std::string rest = text.substr(comma + 1);
  long q = std::stol(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad irrep label '" + text + "'");
  return Irrep(p, q);
}

struct Character {
  std::map<std::pair<long, long>, long> terms;  // zero coefficients dropped

  static Character monomial(long a, long b, long c = 1) {
    Character ch;
    if (c != 0) ch.terms[{a, b}] = c;
    return ch;
  }
  bool is_zero() const { return terms.empty(); }
  long coeff(long a, long b) const {
    auto it = terms.find({a, b});
    return it == terms.end() ? 0 : it->second;
  }
  void add(const std::pair<long, long>& w, long c) {
    if (c == 0) return;
    auto& x = terms[w];
    x += c;
    if (x == 0) terms.erase(w);
  }
  Character& operator+=(const Character& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  Character operator+(const Character& o) const {
    Character r = *this;
    return r += o;
  }
  Character operator-(const Character& o) const {
    Character r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, -c);
    return r;
  }
  Character operator*(const Character& o) const {
    Character r;
    for (const auto& [a, x] : terms)
      for (const auto& [b, y] : o.terms) r.add({a.first + b.first, a.second + b.second}, x * y);
    return r;
  }
  Character scaled(long k) const {
    Character r;
    for (const auto& [w, c] : terms) r.add(w, k * c);
    return r;
  }
  Character dual() const {
    Character r;
    for (const auto& [w, c] : terms) r.add({-w.first, -w.second}, c);
    return r;
  }
  bool is_symmetric() const {
    for (const auto& [w, c] : terms)
      if (coeff(w.second, w.first) != c) return false;
    return true;
  }
  long dim() const {
    long s = 0;
    for (const auto& [w, c] : terms) s += c;
    return s;
  }
  bool operator==(const Character&) const = default;
};

inline Character irrep_character(const Irrep& r) {
  Character c;
  for (long i = 0; i <= r.p - r.q; ++i) c.add({r.p - i, r.q + i}, 1);
  return c;
}

inline Character character_of(const std::map<Irrep, long>& rep) {
  Character c;
  for (const auto& [r, m] : rep) c += irrep_character(r).scaled(m);
  return c;
}

/// Irreducible multiplicities; throws when the input is not a genuine character.
inline std::map<Irrep, long> decompose(Character c) {
  if (!c.is_symmetric()) throw std::invalid_argument("character is not symmetric under the Weyl group");
  std::map<Irrep, long> out;
  while (!c.is_zero()) {
    // the lexicographically largest weight is dominant and highest
    auto [w, m] = *c.terms.rbegin();
    if (m < 0)
      throw std::invalid_argument("negative multiplicity " + std::to_string(m) + " for highest weight (" +
                                  std::to_string(w.first) + "," + std::to_string(w.second) + ")");
    Irrep r(w.first, w.second);
    out[r] += m;
    c = c - irrep_character(r).scaled(m);
  }
  return out;
}

inline long multiplicity(const Irrep& w, const Character& c) {
  auto d = decompose(c);
  auto it = d.find(w);
  return it == d.end() ? 0 : it->second;
}

/// Degree-indexed characters, degrees 0..d.
using GradedRep = std::vector<Character>;

/// Sym^•(rep) up to degree d: Π over weights μ (with multiplicity) of 1/(1 − s·x^μ).
inline GradedRep sym_series(const Character& rep, long d) {
  GradedRep g(static_cast<std::size_t>(d) + 1);
  g[0] = Character::monomial(0, 0);
  for (const auto& [w, m] : rep.terms) {
    if (m < 0) throw std::invalid_argument("symmetric algebra of a virtual character");
    for (long rep_i = 0; rep_i < m; ++rep_i)
      for (std::size_t k = 1; k < g.size(); ++k) g[k] += g[k - 1] * Character::monomial(w.first, w.second);
  }
  return g;
}

inline GradedRep sym_graded(const std::vector<Irrep>& summands, long d) {
  Character c;
  for (const auto& r : summands) c += irrep_character(r);
  return sym_series(c, d);
}

inline std::vector<long> multiplicity(const Irrep& w, const GradedRep& g) {
  std::vector<long> out;
  for (const auto& c : g) out.push_back(multiplicity(w, c));
  return out;
}

inline std::string render(const std::map<Irrep, long>& rep) {
  if (rep.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
    if (it->second == 0) continue;
    if (!first) s << " + ";
    first = false;
    if (it->second != 1) s << it->second << "*";
    s << irrep_name(it->first);
  }
  return first ? "0" : s.str();
}

}  // namespace flopwin::coh
