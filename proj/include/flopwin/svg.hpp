#pragma once

// Static SVG renderings of ∇̄, the periodic arrangement with the invariant
// line, and the facet normals at a wall. Documentation grade only.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "flopwin/windows.hpp"
#include "flopwin/zonotope.hpp"

namespace flopwin::svg {

class Canvas {
 public:
  // world box [-r, r]^2 mapped to a square of `px` pixels
  explicit Canvas(double r, int px = 400) : r_(r), px_(px) {
    out_ << std::fixed << std::setprecision(2);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 "
         << px << " " << px << "\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  double sx(double x) const { return (x + r_) / (2 * r_) * px_; }
  double sy(double y) const { return px_ - (y + r_) / (2 * r_) * px_; }

  void line(double x0, double y0, double x1, double y1, const std::string& stroke, double width = 1,
            const std::string& dash = "") {
    out_ << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(x1) << "\" y2=\"" << sy(y1)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"";
    if (!dash.empty()) out_ << " stroke-dasharray=\"" << dash << "\"";
    out_ << "/>\n";
  }
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill) {
    out_ << "<polygon points=\"";
    for (const auto& [x, y] : pts) out_ << sx(x) << "," << sy(y) << " ";
    out_ << "\" fill=\"" << fill << "\" fill-opacity=\"0.3\" stroke=\"black\"/>\n";
  }
  void dot(double x, double y, const std::string& fill, double rad = 4) {
    out_ << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << rad << "\" fill=\"" << fill << "\"/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 12) {
    out_ << "<text x=\"" << sx(x) + 5 << "\" y=\"" << sy(y) - 5 << "\" font-size=\"" << size
         << "\" font-family=\"sans-serif\">" << escape(s) << "</text>\n";
  }
  void caption(const std::string& s) {
    out_ << "<text x=\"10\" y=\"20\" font-size=\"14\" font-family=\"sans-serif\">" << escape(s) << "</text>\n";
  }
  void axes() {
    line(-r_, 0, r_, 0, "#bbbbbb");
    line(0, -r_, 0, r_, "#bbbbbb");
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

  static std::string escape(const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '<') o += "&lt;";
      else if (c == '>') o += "&gt;";
      else if (c == '&') o += "&amp;";
      else o += c;
    }
    return o;
  }

 private:
  double r_;
  int px_;
  std::ostringstream out_;
};

inline double d(const Rational& q) { return q.get_d(); }

/// Vertices in counterclockwise order (rank 2).
inline std::vector<std::pair<double, double>> ordered_vertices(const Zonotope& z) {
  std::vector<std::pair<double, double>> v;
  for (const auto& p : z.vertices) v.emplace_back(d(p[0]), d(p[1]));
  double cx = 0, cy = 0;
  for (auto [x, y] : v) {
    cx += x;
    cy += y;
  }
  if (!v.empty()) {
    cx /= static_cast<double>(v.size());
    cy /= static_cast<double>(v.size());
  }
  std::sort(v.begin(), v.end(), [&](auto a, auto b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return v;
}

inline std::string placeholder(const std::string& what) {
  Canvas c(1);
  c.caption(what + ": no nonzero weights, nothing to draw");
  return c.finish();
}

// In rank 1 everything is drawn on the x-axis.
inline double coord(const RVec& p, std::size_t i) { return i < p.size() ? d(p[i]) : 0.0; }

/// ∇̄ with its lattice points; dominant weights labelled.
inline std::string polytope_figure(const GitPresentation& p) {
  if (p.rank == 0 || !has_nonzero_weights(p)) return placeholder("polytope");
  const Zonotope z = nabla(p);
  Canvas c(2.5);
  c.axes();
  c.caption("polytope and its lattice points");
  if (p.rank == 2) {
    c.polygon(ordered_vertices(z), "#6699cc");
  } else if (p.rank == 1) {
    double lo = 1e9, hi = -1e9;
    for (const auto& v : z.vertices) {
      lo = std::min(lo, coord(v, 0));
      hi = std::max(hi, coord(v, 0));
    }
    c.line(lo, 0, hi, 0, "#336699", 4);
  } else {
    return placeholder("polytope (rank > 2)");
  }
  const RVec zero(static_cast<std::size_t>(p.rank), Rational(0));
  for (const auto& m : lattice_points(zero, z)) {
    const double x = static_cast<double>(m[0]), y = p.rank == 2 ? static_cast<double>(m[1]) : 0.0;
    c.dot(x, y, "black");
    if (dominant_representative(m, p).representative == m) c.text(x, y, weight_name(m, p));
  }
  return c.finish();
}

/// Hyperplanes ⟨n, χ⟩ ∈ offset + ℤ for every facet family, and the invariant line.
inline std::string arrangement_figure(const GitPresentation& p) {
  if (p.rank == 0 || !has_nonzero_weights(p)) return placeholder("arrangement");
  const Zonotope z = nabla(p);
  const double r = 2.5;
  Canvas c(r);
  c.caption("arrangement and the invariant line");
  const auto desc = skms(p);
  if (p.rank == 1) {
    c.line(-r, 0, r, 0, "#3366cc", 2);
    for (const auto& fam : arrangement(z))
      for (const auto& o : fam.offsets)
        for (int k = -3; k <= 3; ++k) c.dot(d(o + k) / static_cast<double>(fam.normal[0]), 0, "#cc3333", 3);
    return c.finish();
  }
  if (p.rank != 2) return placeholder("arrangement (rank > 2)");
  for (const auto& fam : arrangement(z)) {
    const double a = static_cast<double>(fam.normal[0]), b = static_cast<double>(fam.normal[1]);
    for (const auto& o : fam.offsets)
      for (int k = -6; k <= 6; ++k) {
        const double rhs = d(o) + k;
        if (std::abs(b) > std::abs(a))
          c.line(-r, (rhs + a * r) / b, r, (rhs - a * r) / b, "#999999");
        else
          c.line((rhs + b * r) / a, -r, (rhs - b * r) / a, r, "#999999");
      }
  }
  const double vx = static_cast<double>(desc.invariant_direction[0]),
               vy = static_cast<double>(desc.invariant_direction[1]);
  c.line(-r * vx, -r * vy, r * vx, r * vy, "#3366cc", 2);
  for (long i = -4; i <= 4; ++i) {
    const double s = d(puncture_point(desc, i));
    if (std::abs(s * vx) <= r && std::abs(s * vy) <= r) c.dot(s * vx, s * vy, "#cc3333", 4);
  }
  return c.finish();
}

/// ∇̄ translated to the wall D_j with the primitive inner normals μ_F.
inline std::string facet_figure(const GitPresentation& p, long j = -1) {
  if (p.rank == 0 || !has_nonzero_weights(p)) return placeholder("facets");
  const Zonotope z = nabla(p);
  const auto desc = skms(p);
  const RVec delta = detail::along(desc.invariant_direction, point_D(desc, j));
  const Zonotope zd = z.translated(delta);
  Canvas c(3);
  c.axes();
  c.caption("translated polytope at D" + std::to_string(j) + " and facet one-parameter subgroups");
  if (p.rank == 1) {
    double lo = 1e9, hi = -1e9;
    for (const auto& v : zd.vertices) {
      lo = std::min(lo, coord(v, 0));
      hi = std::max(hi, coord(v, 0));
    }
    c.line(lo, 0, hi, 0, "#336699", 4);
    c.dot(lo, 0, "#cc3333");
    c.dot(hi, 0, "#cc3333");
    return c.finish();
  }
  if (p.rank != 2) return placeholder("facets (rank > 2)");
  c.polygon(ordered_vertices(zd), "#99cc66");
  for (const auto& h : zd.halfspaces) {
    // midpoint of the facet: average of the vertices lying on it
    double mx = 0, my = 0;
    int n = 0;
    for (const auto& v : zd.vertices)
      if (pair(h.normal, v) == h.bound) {
        mx += d(v[0]);
        my += d(v[1]);
        ++n;
      }
    if (n == 0) continue;
    mx /= n;
    my /= n;
    const Cocharacter mu = mu_F(zd, h.normal);
    const double len = 0.4 / std::hypot(static_cast<double>(mu[0]), static_cast<double>(mu[1]));
    const double ex = mx + len * static_cast<double>(mu[0]), ey = my + len * static_cast<double>(mu[1]);
    c.line(mx, my, ex, ey, "#cc3333", 2);
    c.text(ex, ey, "(" + detail::signed_int(mu[0]) + "," + detail::signed_int(mu[1]) + ")", 10);
  }
  return c.finish();
}

struct Figure {
  std::string filename;
  std::string content;
};

inline std::vector<Figure> figures(const GitPresentation& p) {
  return {{"polytope.svg", polytope_figure(p)},
          {"arrangement.svg", arrangement_figure(p)},
          {"facets.svg", facet_figure(p)}};
}

}  // namespace flopwin::svg
