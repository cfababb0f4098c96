#pragma once

// JSON ingestion and emission. Rationals travel as "p/q" strings.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "flopwin/lattice.hpp"
#include "flopwin/quiver.hpp"
#include "flopwin/windows.hpp"
#include "flopwin/zonotope.hpp"

namespace flopwin::io {

using json = nlohmann::ordered_json;

/// Bad input: malformed JSON (with line/column) or a schema violation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline long as_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
  return j.get<long>();
}

inline IVec as_ivec(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of integers");
  IVec v;
  for (const auto& x : j) v.push_back(as_long(x, what));
  return v;
}

inline Rational as_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  throw InputError(what + ": expected an integer or a \"p/q\" string");
}

inline const json& field(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) throw InputError(ctx + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace detail

inline json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": malformed JSON");
  }
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

inline std::string str(const Rational& q) { return to_string(q); }

// presentations

/// `allow_empty` admits the rank-0 presentation with no weights (figures only).
inline GitPresentation presentation_from_json(const json& j, bool allow_empty = false) {
  GitPresentation p;
  p.rank = detail::as_long(detail::field(j, "rank", "presentation"), "rank");
  if (p.rank < 0) throw InputError("rank: must be nonnegative");
  if (j.contains("roots"))
    for (const auto& r : j.at("roots")) p.roots.emplace_back(detail::as_ivec(r, "roots"));
  for (const auto& w : detail::field(j, "weights", "presentation")) {
    WeightMult wm;
    wm.vec = Weight(detail::as_ivec(detail::field(w, "vec", "weights[]"), "weights[].vec"));
    wm.mult = w.contains("mult") ? detail::as_long(w.at("mult"), "weights[].mult") : 1;
    p.weights.push_back(std::move(wm));
  }
  if (j.contains("weyl"))
    for (const auto& m : j.at("weyl")) {
      IMatrix mat;
      for (const auto& row : m) mat.push_back(detail::as_ivec(row, "weyl"));
      p.weyl.push_back(std::move(mat));
    }
  if (allow_empty && p.rank == 0 && p.weights.empty() && p.roots.empty()) return p;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("presentation: ") + e.what());
  }
  return p;
}

inline json to_json(const GitPresentation& p) {
  json j;
  j["rank"] = p.rank;
  j["roots"] = json::array();
  for (const auto& r : p.roots) j["roots"].push_back(r.coords);
  j["weights"] = json::array();
  for (const auto& w : p.weights) j["weights"].push_back({{"vec", w.vec.coords}, {"mult", w.mult}});
  j["weyl"] = json::array();
  for (const auto& m : p.weyl) j["weyl"].push_back(m);
  return j;
}

inline GitPresentation load_presentation(const std::string& path, bool allow_empty = false) {
  return presentation_from_json(load_json(path), allow_empty);
}

// polytope and SKMS

inline json rvec_json(const RVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

inline json skms_json(const Zonotope& z, const SKMSDescriptor& d) {
  json j;
  j["halfspaces"] = json::array();
  for (const auto& h : z.halfspaces) j["halfspaces"].push_back({{"normal", h.normal.coords}, {"bound", str(h.bound)}});
  j["vertices"] = json::array();
  for (const auto& v : z.vertices) j["vertices"].push_back(rvec_json(v));
  j["punctures"] = json::array();
  for (const auto& r : d.puncture_residues) j["punctures"].push_back(str(r));
  j["N"] = d.equatorial_count;
  j["invariant_direction"] = d.invariant_direction;
  return j;
}

inline json window_json(const WindowSpec& w) {
  json j;
  j["face"] = w.face.str();
  j["label"] = w.label;
  j["generators"] = json::array();
  for (const auto& g : w.generators)
    j["generators"].push_back({{"name", g.name}, {"dominant", g.dominant.coords}, {"orbit_size", g.orbit_size}});
  j["points"] = json::array();
  for (const auto& m : w.points) j["points"].push_back(m.coords);
  return j;
}

inline json kappa_json(const std::vector<KappaGenerator>& ks) {
  json a = json::array();
  for (const auto& k : ks)
    a.push_back({{"character", k.character.coords}, {"subgroup", k.subgroup.coords}, {"name", k.canonical_name}});
  return a;
}

// quiver representations

namespace detail {

inline quiver::Vec2 as_vec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw InputError(what + ": expected a 2-vector");
  return {as_rational(j[0], what), as_rational(j[1], what)};
}

inline quiver::Mat2 as_mat2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw InputError(what + ": expected a 2x2 matrix");
  auto r0 = as_vec2(j[0], what), r1 = as_vec2(j[1], what);
  return {{{r0[0], r0[1]}, {r1[0], r1[1]}}};
}

inline json vec2_json(const quiver::Vec2& v) { return json::array({str(v[0]), str(v[1])}); }
inline json mat2_json(const quiver::Mat2& m) { return json::array({vec2_json(m[0]), vec2_json(m[1])}); }

}  // namespace detail

/// Missing δ and parameters are derived from the chart; given ones must agree.
inline quiver::QuiverRep rep_from_json(const json& j) {
  using namespace quiver;
  const auto alpha = detail::as_vec2(detail::field(j, "alpha", "rep"), "alpha");
  const auto alpha_star = detail::as_vec2(detail::field(j, "alpha_star", "rep"), "alpha_star");
  const auto beta = detail::as_mat2(detail::field(j, "beta", "rep"), "beta");
  const auto gamma = detail::as_mat2(detail::field(j, "gamma", "rep"), "gamma");
  QuiverRep r;
  r.alpha = alpha;
  r.alpha_star = alpha_star;
  r.beta = beta;
  r.gamma = gamma;
  r.t = dot(alpha_star, alpha);
  r.delta = j.contains("delta") ? detail::as_mat2(j.at("delta"), "delta")
                                : identity(r.t / 2) - beta - gamma - outer(alpha, alpha_star);
  // δ, β, γ square to scalars when the relations hold; read the scalars off
  r.t_beta = (beta * beta)[0][0];
  r.t_gamma = (gamma * gamma)[0][0];
  r.t_delta = (r.delta * r.delta)[0][0];
  if (j.contains("params")) {
    const auto& ps = j.at("params");
    auto set = [&](const char* key, Rational& slot) {
      if (!ps.contains(key)) return;
      Rational v = detail::as_rational(ps.at(key), std::string("params.") + key);
      if (v != slot) throw InputError(std::string("params.") + key + " = " + str(v) + " disagrees with the matrices");
    };
    set("t", r.t);
    set("T_beta", r.t_beta);
    set("T_gamma", r.t_gamma);
    set("T_delta", r.t_delta);
  }
  return r;
}

inline json to_json(const quiver::QuiverRep& r) {
  json j;
  j["alpha"] = detail::vec2_json(r.alpha);
  j["alpha_star"] = detail::vec2_json(r.alpha_star);
  j["beta"] = detail::mat2_json(r.beta);
  j["gamma"] = detail::mat2_json(r.gamma);
  j["delta"] = detail::mat2_json(r.delta);
  j["params"] = {{"t", str(r.t)}, {"T_beta", str(r.t_beta)}, {"T_gamma", str(r.t_gamma)}, {"T_delta", str(r.t_delta)}};
  return j;
}

inline json to_json(const quiver::BasePoint& p) {
  return {{"x", str(p.x)}, {"y", str(p.y)}, {"z", str(p.z)}, {"t", str(p.t)},
          {"u", str(p.u)}, {"v", str(p.v)}, {"w", str(p.w)}};
}

}  // namespace flopwin::io
