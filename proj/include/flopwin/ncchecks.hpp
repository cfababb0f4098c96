#pragma once

// Degreewise linear-algebra checks on completed algebras: centrality, kernels
// of multiplication maps, periodic resolutions, the short exact sequence, the
// fibre product, dictionary substitution, the Laufer slice and the gluing.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flopwin/linalg.hpp"
#include "flopwin/ncalg.hpp"
#include "flopwin/nccatalog.hpp"
#include "flopwin/ncparse.hpp"

namespace flopwin::nc {

enum class Side { Left, Right };

namespace detail {

inline linalg::Matrix transpose(const linalg::Matrix& m, std::size_t cols) {
  linalg::Matrix t(cols, RVec(m.size(), Rational(0)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

/// Row i: coordinates of (basis word i) · m (or m · word) in degree k + deg m.
inline linalg::Matrix multiplication_matrix(const RewriteSystem& rs, const Poly& m, Side side, long k) {
  const long e = rs.presentation().homogeneous_degree(m);
  linalg::Matrix rows;
  for (const auto& w : rs.normal_words(k)) {
    Poly x = Poly::word(w);
    rows.push_back(rs.coords(side == Side::Right ? x * m : m * x, k + e));
  }
  return rows;
}

}  // namespace detail

inline long degree_of(const RewriteSystem& rs, const Poly& p) {
  long d = rs.presentation().homogeneous_degree(p);
  if (d < 0) throw std::invalid_argument("zero element has no degree");
  return d;
}

/// [expr, g] = 0 for every generator g (checked where the degree fits).
inline bool is_central(const RewriteSystem& rs, const Poly& expr) {
  const auto& p = rs.presentation();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Poly g = Poly::word(Word(1, static_cast<char>(i)));
    Poly c = expr * g - g * expr;
    if (c.is_zero()) continue;
    if (p.homogeneous_degree(c) > rs.cutoff()) continue;
    if (!rs.normal_form(c).is_zero()) return false;
  }
  return true;
}

struct KernelResult {
  GradedDims dims;                          // degrees 0..d − deg(m)
  std::vector<std::vector<Poly>> witnesses;  // basis of the kernel per degree
};

inline KernelResult graded_kernel(const RewriteSystem& rs, const Poly& m, Side side, long d) {
  const long e = degree_of(rs, m);
  if (d > rs.cutoff()) throw DegreeOverflow("kernel degree beyond cutoff");
  KernelResult r;
  for (long k = 0; k + e <= d; ++k) {
    const std::size_t target = rs.normal_words(k + e).size();
    auto mt = detail::transpose(detail::multiplication_matrix(rs, m, side, k), target);
    auto ns = mt.empty() ? linalg::nullspace({}, rs.normal_words(k).size())
                         : linalg::nullspace(mt, rs.normal_words(k).size());
    r.dims.push_back(static_cast<long>(ns.size()));
    std::vector<Poly> ws;
    for (const auto& v : ns) ws.push_back(rs.from_coords(v, k));
    r.witnesses.push_back(std::move(ws));
  }
  return r;
}

/// Bases (as coordinate rows) of the two-sided ideal generated by f, degrees 0..d.
inline std::vector<linalg::Matrix> ideal_basis(const RewriteSystem& rs, const Poly& f, long d) {
  const long e = degree_of(rs, f);
  const auto& p = rs.presentation();
  std::vector<linalg::Matrix> I(static_cast<std::size_t>(d) + 1);
  if (e > d) return I;
  I[static_cast<std::size_t>(e)] = {rs.coords(f, e)};
  linalg::rref(I[static_cast<std::size_t>(e)]);
  for (long k = e + 1; k <= d; ++k) {
    linalg::Matrix rows;
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      long prev = k - p.generators[g].degree;
      if (prev < e) continue;
      Poly gp = Poly::word(Word(1, static_cast<char>(g)));
      for (const auto& row : I[static_cast<std::size_t>(prev)]) {
        Poly x = rs.from_coords(row, prev);
        rows.push_back(rs.coords(gp * x, k));
        rows.push_back(rs.coords(x * gp, k));
      }
    }
    linalg::rref(rows);
    I[static_cast<std::size_t>(k)] = std::move(rows);
  }
  return I;
}

inline GradedDims ideal_dims(const RewriteSystem& rs, const Poly& f, long d) {
  GradedDims out;
  for (const auto& m : ideal_basis(rs, f, d)) out.push_back(static_cast<long>(m.size()));
  return out;
}

/// ker(· m) equals the two-sided ideal (f) in every degree where both are defined.
inline bool kernel_equals_ideal(const RewriteSystem& rs, const Poly& m, Side side, const Poly& f, long d) {
  auto ker = graded_kernel(rs, m, side, d);
  auto ideal = ideal_basis(rs, f, d);
  for (std::size_t k = 0; k < ker.dims.size(); ++k) {
    linalg::Matrix kb;
    for (const auto& w : ker.witnesses[k]) kb.push_back(rs.coords(w, static_cast<long>(k)));
    if (kb.empty() && ideal[k].empty()) continue;
    if (kb.empty() || ideal[k].empty() || !linalg::same_span(kb, ideal[k])) return false;
  }
  return true;
}

struct ResolutionStep {
  Poly multiplier;
  long shift = 0;  // cumulative: F_i = A(−shift)
};

struct ResolutionResult {
  bool exact = true;
  long failed_position = -1;
  std::string reason;
};

/// A ← A(−s1) ← A(−s2) ← … with maps x ↦ x·m_i, exactness at F_1 … F_{n−1}
/// checked in every internal degree whose terms fit under the cutoff.
inline ResolutionResult resolution_check(const RewriteSystem& rs, const std::vector<ResolutionStep>& steps, long d) {
  ResolutionResult res;
  auto fail = [&](long pos, std::string why) {
    res.exact = false;
    res.failed_position = pos;
    res.reason = std::move(why);
    return res;
  };
  long prev = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    long e = degree_of(rs, steps[i].multiplier);
    if (steps[i].shift - prev != e)
      return fail(static_cast<long>(i) + 1, "shift " + std::to_string(steps[i].shift) +
                                                " does not match multiplier degree " + std::to_string(e));
    prev = steps[i].shift;
  }
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const Poly& out = steps[i].multiplier;
    const Poly& in = steps[i + 1].multiplier;
    const long eo = degree_of(rs, out), ei = degree_of(rs, in);
    for (long a = 0; a + eo <= d; ++a) {
      const std::size_t n = rs.normal_words(a).size();
      auto mo = detail::multiplication_matrix(rs, out, Side::Right, a);
      const std::size_t ker = n - (mo.empty() ? 0 : linalg::rank(mo));
      std::size_t img = 0;
      if (a - ei >= 0) {
        auto mi = detail::multiplication_matrix(rs, in, Side::Right, a - ei);
        img = mi.empty() ? 0 : linalg::rank(mi);
        for (const auto& row : mi) {
          Poly x = rs.from_coords(row, a);
          if (!rs.normal_form(x * out).is_zero())
            return fail(static_cast<long>(i) + 1, "composition is not zero in degree " + std::to_string(a));
        }
      }
      if (ker != img)
        return fail(static_cast<long>(i) + 1, "homology of dimension " + std::to_string(ker - img) +
                                                  " in degree " + std::to_string(a));
    }
  }
  return res;
}

/// dim A_k = dim (A/[β,γ])_k + dim (A/t)_{k−2}.
struct SesReport {
  GradedDims a, quotient, sub;
  bool holds = true;
};

inline SesReport ses_dims_check(long d) {
  SesReport r;
  r.a = hilbert(acon(), d);
  r.quotient = hilbert(with_relations(acon(), {"[beta, gamma]"}, "acon/[beta,gamma]"), d);
  r.sub = hilbert(with_relations(acon(), {"t"}, "acon/t"), d);
  for (long k = 0; k <= d; ++k) {
    long s = k >= 2 ? r.sub[static_cast<std::size_t>(k - 2)] : 0;
    if (r.a[static_cast<std::size_t>(k)] != r.quotient[static_cast<std::size_t>(k)] + s) r.holds = false;
  }
  return r;
}

/// Images of the source generators, parsed in the target presentation.
inline std::vector<Poly> dictionary(const Presentation& source, const Presentation& target,
                                    const std::map<std::string, std::string>& images) {
  std::vector<Poly> out;
  for (const auto& g : source.generators) {
    auto it = images.find(g.name);
    if (it == images.end()) throw std::invalid_argument("dictionary has no image for '" + g.name + "'");
    out.push_back(parse(it->second, target));
  }
  return out;
}

inline Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  Poly out;
  for (const auto& [w, c] : p.terms) {
    Poly m = Poly::scalar(c);
    for (unsigned char g : w) m = m * images.at(g);
    out.add(m);
  }
  return out;
}

inline Poly substitute_and_reduce(const RewriteSystem& rs, const Presentation& source,
                                  const std::map<std::string, std::string>& images, const std::string& target) {
  return rs.normal_form(substitute(parse(target, source), dictionary(source, rs.presentation(), images)));
}

struct FiberProductReport {
  GradedDims dims;
  GradedDims generated;  // rank of the span of products of the three pairs
  bool surjective = true;
  bool relations_hold = true;
  bool generates = true;
  bool lands_in_product = true;
};

/// C[t,b,c] ×_{C[b,c]} End(G) with t ↦ 0 and β ↦ b, γ ↦ c.
inline FiberProductReport fiber_product(long d) {
  RewriteSystem A(Ctbc(), d), B(endG(), d), C(Cbc(), d);
  const auto fa = dictionary(A.presentation(), C.presentation(), {{"t", "0"}, {"b", "b"}, {"c", "c"}});
  const auto fb = dictionary(B.presentation(), C.presentation(), {{"beta", "b"}, {"gamma", "c"}});
  FiberProductReport r;

  // Relations of A_con on the pairs (t,0), (b,β), (c,γ).
  const Presentation ac = acon();
  const auto ga = dictionary(ac, A.presentation(), {{"t", "t"}, {"beta", "b"}, {"gamma", "c"}});
  const auto gb = dictionary(ac, B.presentation(), {{"t", "0"}, {"beta", "beta"}, {"gamma", "gamma"}});
  for (const auto& rel : ac.all_relations())
    if (!A.normal_form(substitute(rel, ga)).is_zero() || !B.normal_form(substitute(rel, gb)).is_zero())
      r.relations_hold = false;

  linalg::Matrix span{[&] {
    RVec v = A.coords(Poly::scalar(1), 0);
    RVec w = B.coords(Poly::scalar(1), 0);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  }()};
  for (long k = 0; k <= d; ++k) {
    const std::size_t na = A.normal_words(k).size(), nb = B.normal_words(k).size(),
                      nc = C.normal_words(k).size();
    linalg::Matrix ma, mb, stacked;
    for (const auto& w : A.normal_words(k)) ma.push_back(C.coords(substitute(Poly::word(w), fa), k));
    for (const auto& w : B.normal_words(k)) mb.push_back(C.coords(substitute(Poly::word(w), fb), k));
    if (linalg::rank(ma) != nc || linalg::rank(mb) != nc) r.surjective = false;
    stacked = ma;
    for (auto row : mb) {
      for (auto& x : row) x = -x;
      stacked.push_back(std::move(row));
    }
    const std::size_t rk = nc == 0 ? 0 : linalg::rank(stacked);
    r.dims.push_back(static_cast<long>(na + nb - rk));

    if (k > 0) {
      linalg::Matrix next;
      for (const auto& row : span) {
        RVec xa(row.begin(), row.begin() + static_cast<long>(A.normal_words(k - 1).size()));
        RVec xb(row.begin() + static_cast<long>(A.normal_words(k - 1).size()), row.end());
        Poly pa = A.from_coords(xa, k - 1), pb = B.from_coords(xb, k - 1);
        for (std::size_t g = 0; g < 3; ++g) {
          RVec v = A.coords(pa * ga[g], k);
          RVec w = B.coords(pb * gb[g], k);
          v.insert(v.end(), w.begin(), w.end());
          next.push_back(std::move(v));
        }
      }
      linalg::rref(next);
      span = std::move(next);
    }
    for (const auto& row : span) {
      RVec xa(row.begin(), row.begin() + static_cast<long>(na));
      RVec xb(row.begin() + static_cast<long>(na), row.end());
      Poly ia = C.normal_form(substitute(A.from_coords(xa, k), fa));
      Poly ib = C.normal_form(substitute(B.from_coords(xb, k), fb));
      if (!(ia == ib)) r.lands_in_product = false;
    }
    r.generated.push_back(static_cast<long>(span.size()));
    if (r.generated.back() != r.dims.back()) r.generates = false;
  }
  return r;
}

struct LauferReport {
  std::vector<Poly> slice_relations;  // in A_con with weights t=4, β=3, γ=2
  GradedDims slice, target;
  bool match = false;
  bool beta_cubed_zero = false;
};

/// A_con ⊗_R R/(w + t, u − y, v) against C<β,γ>/(β² − γ³, βγ + γβ).
inline LauferReport laufer_slice(long d) {
  LauferReport r;
  Presentation weighted = acon(4, 3, 2);
  const Presentation base = base_ring();
  const auto images = dictionary(base, weighted, base_dictionary());
  for (const char* s : {"w + t", "u - y", "v"}) r.slice_relations.push_back(substitute(parse(s, base), images));
  Presentation slice = weighted;
  slice.name = "acon_laufer_slice";
  for (const auto& p : r.slice_relations) slice.relations.push_back(p);
  r.slice = hilbert(slice, d);
  RewriteSystem target(laufer_target(), std::max<long>(d, 9));
  r.target = target.dims();
  r.target.resize(static_cast<std::size_t>(d) + 1);
  r.match = r.slice == r.target;
  r.beta_cubed_zero = target.normal_form(parse("beta^3", target.presentation())).is_zero();
  return r;
}

struct GluedAlgebra {
  GradedDims top, bottom, bimodule, total;
  long shift = 0;
};

/// Upper-triangular algebra [[top, M], [0, bottom]]. The bimodule M is cyclic;
/// its dims must agree with top/(left annihilator) and bottom/(right annihilator).
inline GluedAlgebra glue(const Presentation& top, const Presentation& bottom, const GradedDims& bimodule,
                         const std::vector<std::string>& left_annihilator,
                         const std::vector<std::string>& right_annihilator, long d, long shift = 0) {
  GluedAlgebra g;
  g.top = hilbert(top, d);
  g.bottom = hilbert(bottom, d);
  g.shift = shift;
  g.bimodule = bimodule;
  g.bimodule.resize(static_cast<std::size_t>(d) + 1, 0);
  bool zero = std::all_of(g.bimodule.begin(), g.bimodule.end(), [](long x) { return x == 0; });
  if (!zero) {
    auto lq = hilbert(with_relations(top, left_annihilator, top.name + "/ann"), d);
    auto rq = hilbert(with_relations(bottom, right_annihilator, bottom.name + "/ann"), d);
    if (lq != g.bimodule || rq != g.bimodule)
      throw std::invalid_argument("bimodule dimensions are incompatible with the left/right actions");
  }
  for (long k = 0; k <= d; ++k) {
    long m = k - shift >= 0 ? g.bimodule[static_cast<std::size_t>(k - shift)] : 0;
    g.total.push_back(g.top[static_cast<std::size_t>(k)] + g.bottom[static_cast<std::size_t>(k)] + m);
  }
  return g;
}

struct OreReport {
  bool central = true;
  bool free_basis = true;  // {P^i Q^j R^l · b} is a basis in each degree
  GradedDims dims, expected;
};

/// End(G) over C[β², γ², βγ+γβ] with basis {1, β, γ, βγ}.
inline OreReport ore_basis_check(long d) {
  RewriteSystem rs(endG(), d);
  const auto& p = rs.presentation();
  OreReport r;
  const std::vector<Poly> cen = {parse("beta^2", p), parse("gamma^2", p), parse("beta*gamma + gamma*beta", p)};
  for (const auto& c : cen) r.central = r.central && is_central(rs, c);
  const std::vector<Poly> basis = {Poly::scalar(1), parse("beta", p), parse("gamma", p), parse("beta*gamma", p)};
  // P^i Q^j R^l, one per exponent triple
  std::vector<std::vector<Poly>> mono(static_cast<std::size_t>(d) + 1);
  auto pow = [&](const Poly& x, long n) {
    Poly out = Poly::scalar(1);
    for (long k = 0; k < n; ++k) out = rs.normal_form(out * x);
    return out;
  };
  for (long i = 0; 2 * i <= d; ++i)
    for (long j = 0; 2 * (i + j) <= d; ++j)
      for (long l = 0; 2 * (i + j + l) <= d; ++l)
        mono[static_cast<std::size_t>(2 * (i + j + l))].push_back(
            rs.normal_form(pow(cen[0], i) * pow(cen[1], j) * pow(cen[2], l)));
  r.dims = rs.dims();
  r.expected = polynomial_ring_dims({2, 2, 2}, d);
  GradedDims ex(static_cast<std::size_t>(d) + 1, 0);
  for (long k = 0; k <= d; ++k)
    for (long b : {0L, 1L, 1L, 2L})
      if (k - b >= 0) ex[static_cast<std::size_t>(k)] += r.expected[static_cast<std::size_t>(k - b)];
  r.expected = ex;
  for (long k = 0; k <= d; ++k) {
    linalg::Matrix rows;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      long bd = bi == 0 ? 0 : bi == 3 ? 2 : 1;
      if (k - bd < 0) continue;
      for (const auto& m : mono[static_cast<std::size_t>(k - bd)]) rows.push_back(rs.coords(m * basis[bi], k));
    }
    const std::size_t n = rs.normal_words(k).size();
    std::size_t rk = rows.empty() ? 0 : linalg::rank(rows);
    if (rk != n || rows.size() != n) r.free_basis = false;
  }
  if (r.dims != r.expected) r.free_basis = false;
  return r;
}

}  // namespace flopwin::nc
