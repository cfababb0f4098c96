#pragma once

// Representations of dimension vector (1,2) of the doubled D4-type quiver:
// α : e0 → e1 (a column vector), α* : e1 → e0 (a row covector) and loops
// β, γ, δ at e1. Stability, Kempf–Ness strata and the invariant map to the
// 7-dimensional base.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flopwin/rational.hpp"

namespace flopwin::quiver {

using Vec2 = std::array<Rational, 2>;
using Mat2 = std::array<std::array<Rational, 2>, 2>;

inline Mat2 identity(const Rational& s = 1) { return {{{s, 0}, {0, s}}}; }
inline Mat2 zero_mat() { return identity(0); }

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 c = zero_mat();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}
inline Mat2 operator*(const Rational& s, const Mat2& a) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = s * a[i][j];
  return c;
}
inline Vec2 operator*(const Mat2& a, const Vec2& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}
/// covector times matrix
inline Vec2 row_times(const Vec2& r, const Mat2& a) {
  return {r[0] * a[0][0] + r[1] * a[1][0], r[0] * a[0][1] + r[1] * a[1][1]};
}
inline Rational dot(const Vec2& r, const Vec2& c) { return r[0] * c[0] + r[1] * c[1]; }
inline Rational det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
inline Rational trace(const Mat2& a) { return a[0][0] + a[1][1]; }
inline Rational det_cols(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline Mat2 outer(const Vec2& c, const Vec2& r) {
  return {{{c[0] * r[0], c[0] * r[1]}, {c[1] * r[0], c[1] * r[1]}}};
}
inline bool is_zero(const Vec2& v) { return v[0] == 0 && v[1] == 0; }
inline bool is_zero(const Mat2& m) { return m == zero_mat(); }
inline bool is_scalar(const Mat2& m) { return m[0][1] == 0 && m[1][0] == 0 && m[0][0] == m[1][1]; }
inline Mat2 inverse(const Mat2& a) {
  Rational d = det(a);
  if (d == 0) throw std::invalid_argument("singular matrix");
  return {{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}};
}

struct QuiverRep {
  Vec2 alpha{0, 0};
  Vec2 alpha_star{0, 0};
  Mat2 beta = zero_mat(), gamma = zero_mat(), delta = zero_mat();
  Rational t = 0, t_beta = 0, t_gamma = 0, t_delta = 0;
};

struct RelationReport {
  bool holds = true;
  std::vector<std::pair<std::string, Mat2>> residuals;  // only the failing relations
};

/// α*·α = t, β² = Tβ, γ² = Tγ, δ² = Tδ, αα* + β + γ + δ = t/2.
inline RelationReport relations_hold(const QuiverRep& r) {
  RelationReport rep;
  auto check = [&](const char* name, const Mat2& res) {
    if (!is_zero(res)) {
      rep.holds = false;
      rep.residuals.emplace_back(name, res);
    }
  };
  check("alpha_star*alpha = t", identity(dot(r.alpha_star, r.alpha) - r.t));
  check("beta^2 = T_beta", r.beta * r.beta - identity(r.t_beta));
  check("gamma^2 = T_gamma", r.gamma * r.gamma - identity(r.t_gamma));
  check("delta^2 = T_delta", r.delta * r.delta - identity(r.t_delta));
  check("alpha*alpha_star + beta + gamma + delta = t/2",
        outer(r.alpha, r.alpha_star) + r.beta + r.gamma + r.delta - identity(r.t / 2));
  return rep;
}

/// Solves for δ and the deformation parameters from the chart (α, α*, β, γ).
inline QuiverRep from_chart(const Vec2& alpha, const Vec2& alpha_star, const Mat2& beta, const Mat2& gamma) {
  if (trace(beta) != 0 || trace(gamma) != 0)
    throw std::invalid_argument("from_chart needs trace-free beta and gamma");
  QuiverRep r;
  r.alpha = alpha;
  r.alpha_star = alpha_star;
  r.beta = beta;
  r.gamma = gamma;
  r.t = dot(alpha_star, alpha);
  r.delta = identity(r.t / 2) - beta - gamma - outer(alpha, alpha_star);
  // Cayley–Hamilton on trace-free matrices: m² = −det(m)·I
  r.t_beta = -det(beta);
  r.t_gamma = -det(gamma);
  r.t_delta = -det(r.delta);
  return r;
}

enum class Stability { Theta1, Theta2 };
enum class Stratum { S0, S1, Semistable };

inline const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::S0:
      return "S0";
    case Stratum::S1:
      return "S1";
    default:
      return "semistable";
  }
}

inline void require_relations(const QuiverRep& r) {
  auto rep = relations_hold(r);
  if (!rep.holds) throw std::invalid_argument("relations violated: " + rep.residuals.front().first);
}

inline bool is_semistable(const QuiverRep& r, Stability s) {
  require_relations(r);
  const std::array<const Mat2*, 3> loops{&r.beta, &r.gamma, &r.delta};
  if (s == Stability::Theta1) {
    if (is_zero(r.alpha)) return false;
    for (auto m : loops)
      if (det_cols(r.alpha, *m * r.alpha) != 0) return true;
    return false;
  }
  if (is_zero(r.alpha_star)) return false;
  const Vec2 k{-r.alpha_star[1], r.alpha_star[0]};  // spans ker α*
  for (auto m : loops)
    if (dot(r.alpha_star, *m * k) != 0) return true;
  return false;
}

/// Kempf–Ness stratum for θ1.
inline Stratum stratum(const QuiverRep& r) {
  require_relations(r);
  if (is_zero(r.alpha)) return Stratum::S0;
  if (det_cols(r.alpha, r.beta * r.alpha) == 0 && det_cols(r.alpha, r.gamma * r.alpha) == 0) return Stratum::S1;
  return Stratum::Semistable;
}

/// g·(α, α*, β, γ, δ) = (gα, α*g⁻¹, gβg⁻¹, gγg⁻¹, gδg⁻¹).
inline QuiverRep act(const Mat2& g, const QuiverRep& r) {
  Mat2 gi = inverse(g);
  QuiverRep o = r;
  o.alpha = g * r.alpha;
  o.alpha_star = row_times(r.alpha_star, gi);
  o.beta = g * r.beta * gi;
  o.gamma = g * r.gamma * gi;
  o.delta = g * r.delta * gi;
  return o;
}

struct BasePoint {
  Rational x = 0, y = 0, z = 0, t = 0, u = 0, v = 0, w = 0;
  bool operator==(const BasePoint&) const = default;
};

/// GL2-invariant functions on the representation space.
inline BasePoint base_map(const QuiverRep& r) {
  require_relations(r);
  BasePoint p;
  const Mat2 anti = r.beta * r.gamma + r.gamma * r.beta;
  if (!is_scalar(anti)) throw std::invalid_argument("beta*gamma + gamma*beta is not scalar; beta, gamma not trace-free");
  p.t = r.t;
  p.u = det(r.beta);
  p.w = det(r.gamma);
  p.v = anti[0][0] / 2;
  p.y = -dot(r.alpha_star, r.gamma * r.alpha);
  p.z = -dot(r.alpha_star, r.beta * r.alpha);
  p.x = dot(r.alpha_star, (r.beta * r.gamma - r.gamma * r.beta) * r.alpha) / 2;
  return p;
}

/// x² + uy² + 2vyz + wz² + (uw − v²)t²
inline Rational base_equation(const BasePoint& p) {
  return p.x * p.x + p.u * p.y * p.y + 2 * p.v * p.y * p.z + p.w * p.z * p.z + (p.u * p.w - p.v * p.v) * p.t * p.t;
}

inline Rational conic_discriminant(const Rational& u, const Rational& v, const Rational& w) { return u * w - v * v; }

struct SingularLocusReport {
  std::array<Rational, 7> generators;
  bool in_z1 = false;
  bool in_z2 = false;
  bool on_singular_locus() const {
    for (const auto& g : generators)
      if (g != 0) return false;
    return true;
  }
};

inline const std::array<const char*, 7>& singular_generator_names() {
  static const std::array<const char*, 7> names{"x", "uy+vz", "vy+wz", "z^2+ut^2", "y^2+wt^2", "yz-vt^2", "(uw-v^2)t"};
  return names;
}

inline SingularLocusReport singular_locus_check(const BasePoint& p) {
  SingularLocusReport r;
  const auto& [x, y, z, t, u, v, w] = p;
  r.generators = {x, u * y + v * z, v * y + w * z, z * z + u * t * t, y * y + w * t * t, y * z - v * t * t,
                  (u * w - v * v) * t};
  r.in_z1 = x == 0 && y == 0 && z == 0 && t == 0;
  if (x == 0) {
    if (t != 0)
      r.in_z2 = u * t * t + z * z == 0 && w * t * t + y * y == 0 && v * t * t - y * z == 0;
    else
      r.in_z2 = y == 0 && z == 0 && u * w == v * v;
  }
  return r;
}

/// Point of Z2 with parameters (b, c, t).
inline BasePoint z2_point(const Rational& b, const Rational& c, const Rational& t) {
  return {0, b * t, c * t, t, -c * c, b * c, -b * b};
}

}  // namespace flopwin::quiver
