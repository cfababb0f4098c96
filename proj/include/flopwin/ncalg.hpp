#pragma once

// Graded noncommutative polynomials and a degree-truncated Buchberger
// completion. Words are std::strings of generator indices; the monomial order
// is weighted degree, then lexicographic in generator order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flopwin/linalg.hpp"
#include "flopwin/rational.hpp"

namespace flopwin::nc {

using Word = std::string;
using GradedDims = std::vector<long>;

class DegreeOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Sparse polynomial: word → coefficient, zero coefficients never stored.
struct Poly {
  std::map<Word, Rational> terms;

  Poly() = default;
  static Poly word(const Word& w, const Rational& c = 1) {
    Poly p;
    if (c != 0) p.terms.emplace(w, c);
    return p;
  }
  static Poly scalar(const Rational& c) { return word(Word(), c); }

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add(const Poly& o, const Rational& c = 1) {
    for (const auto& [w, x] : o.terms) add(w, c * x);
  }
  Poly operator+(const Poly& o) const {
    Poly p = *this;
    p.add(o);
    return p;
  }
  Poly operator-(const Poly& o) const {
    Poly p = *this;
    p.add(o, -1);
    return p;
  }
  Poly operator-() const { return scaled(-1); }
  Poly scaled(const Rational& c) const {
    Poly p;
    if (c == 0) return p;
    for (const auto& [w, x] : terms) p.terms.emplace(w, c * x);
    return p;
  }
  Poly operator*(const Poly& o) const {
    Poly p;
    for (const auto& [a, x] : terms)
      for (const auto& [b, y] : o.terms) p.add(a + b, x * y);
    return p;
  }
  bool operator==(const Poly&) const = default;
};

struct Generator {
  std::string name;
  long degree = 1;
  bool central = false;
  std::vector<std::string> aliases;
};

struct Presentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<Poly> relations;

  long word_degree(const Word& w) const {
    long d = 0;
    for (unsigned char c : w) d += generators.at(c).degree;
    return d;
  }
  Word gen(const std::string& n) const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto& g = generators[i];
      if (g.name == n || std::find(g.aliases.begin(), g.aliases.end(), n) != g.aliases.end())
        return Word(1, static_cast<char>(i));
    }
    throw std::invalid_argument("unknown generator '" + n + "' in algebra " + name);
  }
  /// Returns the degree, throwing when p is not homogeneous. Zero has degree −1.
  long homogeneous_degree(const Poly& p) const {
    long d = -1;
    for (const auto& [w, c] : p.terms) {
      long e = word_degree(w);
      if (d >= 0 && e != d) throw std::invalid_argument("polynomial is not homogeneous in " + name);
      d = e;
    }
    return d;
  }
  /// Relations together with the implicit commutators of central generators.
  std::vector<Poly> all_relations() const {
    std::vector<Poly> out = relations;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!generators[i].central) continue;
      for (std::size_t j = 0; j < generators.size(); ++j) {
        if (j == i || (generators[j].central && j < i)) continue;
        Word a(1, static_cast<char>(i)), b(1, static_cast<char>(j));
        out.push_back(Poly::word(a + b) - Poly::word(b + a));
      }
    }
    return out;
  }
  std::string render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += "*";
      s += generators.at(static_cast<unsigned char>(w[i])).name;
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }
  /// Deterministic text form, leading term first.
  std::string render(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Word, Rational>> ts(p.terms.begin(), p.terms.end());
    std::sort(ts.begin(), ts.end(), [this](const auto& a, const auto& b) {
      long da = word_degree(a.first), db = word_degree(b.first);
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Rational c = ts[i].second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (i == 0)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      const bool unit = c == 1 && !ts[i].first.empty();
      if (!unit) s += to_string(c);
      if (!ts[i].first.empty()) s += (unit ? "" : "*") + render_word(ts[i].first);
    }
    return s;
  }
};

struct Rule {
  Word lead;
  Poly tail;  // lead ≡ tail
  long degree = 0;
};

/// A presentation completed up to a degree cutoff: rewriting rules, normal
/// words per degree, and cached normal forms.
class RewriteSystem {
 public:
  RewriteSystem(Presentation p, long cutoff) : pres_(std::move(p)), cutoff_(cutoff) {
    if (cutoff_ < 0) throw std::invalid_argument("negative cutoff");
    complete();
  }

  const Presentation& presentation() const { return pres_; }
  long cutoff() const { return cutoff_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Word>& normal_words(long k) const { return normal_.at(static_cast<std::size_t>(k)); }

  GradedDims dims() const {
    GradedDims d;
    for (const auto& n : normal_) d.push_back(static_cast<long>(n.size()));
    return d;
  }

  Poly normal_form(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p.terms) {
      if (pres_.word_degree(w) > cutoff_)
        throw DegreeOverflow("degree " + std::to_string(pres_.word_degree(w)) + " exceeds cutoff " +
                             std::to_string(cutoff_));
      out.add(reduce_word(w), c);
    }
    return out;
  }

  /// Coordinates of the normal form of a degree-k element in the normal-word basis.
  RVec coords(const Poly& p, long k) const {
    const auto& idx = index_.at(static_cast<std::size_t>(k));
    RVec v(idx.size(), Rational(0));
    for (const auto& [w, c] : normal_form(p).terms) {
      auto it = idx.find(w);
      if (it == idx.end()) throw std::invalid_argument("element is not of degree " + std::to_string(k));
      v[it->second] += c;
    }
    return v;
  }

  Poly from_coords(const RVec& v, long k) const {
    Poly p;
    const auto& ws = normal_words(k);
    for (std::size_t i = 0; i < v.size(); ++i) p.add(ws[i], v[i]);
    return p;
  }

  /// Overlaps of degree ≤ cutoff that do not resolve (empty when confluent).
  std::vector<std::pair<std::size_t, std::size_t>> unresolved_overlaps() const {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (long k = 0; k <= cutoff_; ++k)
      for (const auto& [ij, s] : overlaps(k))
        if (!normal_form(s).is_zero()) bad.push_back(ij);
    return bad;
  }

 private:
  Presentation pres_;
  long cutoff_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t> lead_index_;
  std::set<std::size_t> lead_lengths_;
  std::vector<std::vector<Word>> normal_;
  std::vector<std::unordered_map<Word, std::size_t>> index_;
  mutable std::vector<std::unordered_map<Word, Poly>> memo_;

  const Rule* find_rule(const Word& w, std::size_t& pos) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t len : lead_lengths_) {
        if (i + len > w.size()) break;
        auto it = lead_index_.find(w.substr(i, len));
        if (it != lead_index_.end()) {
          pos = i;
          return &rules_[it->second];
        }
      }
    return nullptr;
  }

  const Poly& reduce_word(const Word& w) const {
    auto& memo = memo_.at(static_cast<std::size_t>(pres_.word_degree(w)));
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::size_t pos = 0;
    const Rule* r = find_rule(w, pos);
    Poly out;
    if (!r) {
      out = Poly::word(w);
    } else {
      const Word u = w.substr(0, pos), v = w.substr(pos + r->lead.size());
      for (const auto& [m, c] : r->tail.terms) out.add(reduce_word(u + m + v), c);
    }
    return memo.emplace(w, std::move(out)).first->second;
  }

  /// S-polynomials of rule overlaps lead1 = u·o, lead2 = o·v of weighted degree k.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Poly>> overlaps(long k) const {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Poly>> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Word& a = rules_[i].lead;
        const Word& b = rules_[j].lead;
        for (std::size_t l = 1; l < a.size() && l < b.size(); ++l) {
          if (a.compare(a.size() - l, l, b, 0, l) != 0) continue;
          const Word o = b.substr(0, l);
          if (rules_[i].degree + rules_[j].degree - pres_.word_degree(o) != k) continue;
          const Word u = a.substr(0, a.size() - l), v = b.substr(l);
          Poly s = rules_[i].tail * Poly::word(v) - Poly::word(u) * rules_[j].tail;
          out.push_back({{i, j}, std::move(s)});
        }
      }
    return out;
  }

  static const Word& lead_of(const Poly& p) { return std::prev(p.terms.end())->first; }

  void add_rules(std::vector<Poly> cands, long k) {
    // Echelon form with distinct leading words, then full inter-reduction.
    std::vector<Poly> basis;
    for (auto& p : cands) {
      for (;;) {
        if (p.is_zero()) break;
        const Word& lw = lead_of(p);
        auto it = std::find_if(basis.begin(), basis.end(), [&](const Poly& b) { return lead_of(b) == lw; });
        if (it == basis.end()) break;
        Rational c = p.terms.at(lw);
        p.add(*it, -c);
      }
      if (p.is_zero()) continue;
      p = p.scaled(1 / Rational(p.terms.at(lead_of(p))));
      basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) { return lead_of(a) < lead_of(b); });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Word lw = lead_of(basis[i]);
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        auto it = basis[j].terms.find(lw);
        if (it != basis[j].terms.end()) {
          Rational c = it->second;
          basis[j].add(basis[i], -c);
        }
      }
    }
    for (std::size_t i = basis.size(); i-- > 0;) {
      const Word lw = lead_of(basis[i]);
      for (std::size_t j = 0; j < i; ++j) {
        auto it = basis[j].terms.find(lw);
        if (it != basis[j].terms.end()) {
          Rational c = it->second;
          basis[j].add(basis[i], -c);
        }
      }
    }
    for (auto& b : basis) {
      Rule r;
      r.lead = lead_of(b);
      r.degree = k;
      b.terms.erase(r.lead);
      r.tail = -b;
      lead_index_.emplace(r.lead, rules_.size());
      lead_lengths_.insert(r.lead.size());
      rules_.push_back(std::move(r));
    }
  }

  void complete() {
    std::vector<std::vector<Poly>> by_degree(static_cast<std::size_t>(cutoff_) + 1);
    for (const auto& g : pres_.generators)
      if (g.degree < 1) throw std::invalid_argument("generator degrees must be positive");
    for (const auto& r : pres_.all_relations()) {
      long d = pres_.homogeneous_degree(r);
      if (d < 0) continue;
      if (d > cutoff_)
        throw std::invalid_argument("cutoff " + std::to_string(cutoff_) + " is below relation degree " +
                                    std::to_string(d));
      if (d == 0) throw std::invalid_argument("relation of degree 0 makes the algebra trivial");
      by_degree[static_cast<std::size_t>(d)].push_back(r);
    }
    memo_.assign(static_cast<std::size_t>(cutoff_) + 1, {});
    normal_.assign(1, {Word()});
    index_.assign(1, {{Word(), 0}});
    for (long k = 1; k <= cutoff_; ++k) {
      std::vector<Poly> cands;
      for (const auto& r : by_degree[static_cast<std::size_t>(k)]) cands.push_back(normal_form(r));
      for (auto& [ij, s] : overlaps(k)) cands.push_back(normal_form(s));
      add_rules(std::move(cands), k);
      memo_[static_cast<std::size_t>(k)].clear();
      std::vector<Word> nk;
      for (std::size_t g = 0; g < pres_.generators.size(); ++g) {
        long prev = k - pres_.generators[g].degree;
        if (prev < 0) continue;
        for (const auto& w : normal_[static_cast<std::size_t>(prev)]) {
          Word s = w + static_cast<char>(g);
          bool ok = true;
          for (std::size_t len : lead_lengths_) {
            if (len > s.size()) break;
            if (lead_index_.count(s.substr(s.size() - len))) {
              ok = false;
              break;
            }
          }
          if (ok) nk.push_back(std::move(s));
        }
      }
      std::sort(nk.begin(), nk.end());
      std::unordered_map<Word, std::size_t> idx;
      for (std::size_t i = 0; i < nk.size(); ++i) idx.emplace(nk[i], i);
      normal_.push_back(std::move(nk));
      index_.push_back(std::move(idx));
    }
  }
};

inline GradedDims hilbert(const Presentation& p, long d) { return RewriteSystem(p, d).dims(); }

/// Coefficients of Π_i 1/(1 − s^{e_i}) up to degree d.
inline GradedDims polynomial_ring_dims(const std::vector<long>& degrees, long d) {
  GradedDims c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (long e : degrees)
    for (long k = e; k <= d; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - e)];
  return c;
}

}  // namespace flopwin::nc
