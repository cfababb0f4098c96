#pragma once

// Named presentations: the contraction algebra and its quotients, End(G),
// the commutative comparison rings, the fibre algebra, and the Laufer target.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flopwin/ncalg.hpp"
#include "flopwin/ncparse.hpp"

namespace flopwin::nc {

inline Presentation make_presentation(std::string name, std::vector<Generator> gens,
                                      const std::vector<std::string>& relations) {
  Presentation p{std::move(name), std::move(gens), {}};
  for (const auto& r : relations) p.relations.push_back(parse(r, p));
  return p;
}

inline Presentation with_relations(Presentation p, const std::vector<std::string>& extra, std::string name) {
  for (const auto& r : extra) p.relations.push_back(parse(r, p));
  p.name = std::move(name);
  return p;
}

/// C[t]<β,γ> / ([β²,γ], [γ²,β], t[β,γ]).
inline Presentation acon(long deg_t = 1, long deg_beta = 1, long deg_gamma = 1) {
  return make_presentation("acon",
                           {{"t", deg_t, true, {}}, {"beta", deg_beta, false, {"β"}}, {"gamma", deg_gamma, false, {"γ"}}},
                           {"[beta^2, gamma]", "[gamma^2, beta]", "t*[beta, gamma]"});
}

/// C<β,γ> / ([β²,γ], [γ²,β]).
inline Presentation endG() {
  return make_presentation("endG", {{"beta", 1, false, {"β"}}, {"gamma", 1, false, {"γ"}}},
                           {"[beta^2, gamma]", "[gamma^2, beta]"});
}

inline Presentation Ctbc() {
  return make_presentation("Ctbc", {{"t", 1, true, {}}, {"b", 1, true, {}}, {"c", 1, true, {}}}, {});
}

inline Presentation Cbc() { return make_presentation("Cbc", {{"b", 1, true, {}}, {"c", 1, true, {}}}, {}); }

/// C[T_β, T_γ, T_δ].
inline Presentation afib() {
  return make_presentation("afib", {{"Tb", 1, true, {}}, {"Tg", 1, true, {}}, {"Td", 1, true, {}}}, {});
}

/// C<β,γ> / (β² − γ³, βγ + γβ) with deg β = 3, deg γ = 2.
inline Presentation laufer_target() {
  return make_presentation("laufer_target", {{"beta", 3, false, {"β"}}, {"gamma", 2, false, {"γ"}}},
                           {"beta^2 - gamma^3", "beta*gamma + gamma*beta"});
}

inline std::vector<std::string> catalog_names() { return {"acon", "afib", "endG", "Ctbc", "Cbc", "laufer_target"}; }

inline Presentation catalog(const std::string& name) {
  if (name == "acon") return acon();
  if (name == "afib") return afib();
  if (name == "endG") return endG();
  if (name == "Ctbc") return Ctbc();
  if (name == "Cbc") return Cbc();
  if (name == "laufer_target") return laufer_target();
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

/// Coordinates x, y, z, t, u, v, w on the base of the universal flop.
inline Presentation base_ring() {
  std::vector<Generator> g;
  for (const char* n : {"x", "y", "z", "t", "u", "v", "w"}) g.push_back({n, 1, true, {}});
  return make_presentation("base", std::move(g), {});
}

inline const std::string& hypersurface_text() {
  static const std::string s = "x^2 + u*y^2 + 2*v*y*z + w*z^2 + (u*w - v^2)*t^2";
  return s;
}

inline const std::vector<std::string>& singular_generators_text() {
  static const std::vector<std::string> s = {"x",           "u*y + v*z",   "v*y + w*z", "z^2 + u*t^2",
                                             "y^2 + w*t^2", "y*z - v*t^2", "(u*w - v^2)*t"};
  return s;
}

/// The base coordinates as elements of A_con (signs fixed so the hypersurface
/// equation holds).
inline const std::map<std::string, std::string>& base_dictionary() {
  static const std::map<std::string, std::string> d = {
      {"x", "0"},        {"y", "-t*gamma"}, {"z", "-t*beta"}, {"t", "t"}, {"u", "-beta^2"},
      {"v", "1/2*(beta*gamma + gamma*beta)"}, {"w", "-gamma^2"}};
  return d;
}

}  // namespace flopwin::nc
