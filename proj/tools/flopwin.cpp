// flopwin: command-line front end.
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flopwin/cohomology.hpp"
#include "flopwin/io.hpp"
#include "flopwin/nccatalog.hpp"
#include "flopwin/ncchecks.hpp"
#include "flopwin/svg.hpp"
#include "flopwin/verify.hpp"

namespace {

using namespace flopwin;
using io::json;

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

GitPresentation input_presentation(const std::string& path, bool allow_empty = false) {
  return path.empty() ? universal_flop_length2() : io::load_presentation(path, allow_empty);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

long env_degree(long fallback) {
  if (const char* e = std::getenv("FLOPWIN_MAX_DEGREE")) {
    long v = std::strtol(e, nullptr, 10);
    if (v > 0) return v;
  }
  return fallback;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact window, algebra and cohomology computations for the length-2 universal flop"};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "GIT presentation JSON (default: built-in universal flop)");
  };

  auto* skms_cmd = app.add_subcommand("skms", "polytope, facets and puncture data");
  add_input(skms_cmd);

  auto* win_cmd = app.add_subcommand("windows", "window categories for faces of the SKMS line");
  add_input(win_cmd);
  std::string face;
  long jmin = -2, jmax = 2;
  bool win_json = false;
  win_cmd->add_option("--face", face, "face C:j or D:j (omit for a table)");
  win_cmd->add_option("--jmin", jmin, "first index of the table");
  win_cmd->add_option("--jmax", jmax, "last index of the table");
  win_cmd->add_flag("--json", win_json, "JSON output");

  auto* kappa_cmd = app.add_subcommand("kappa", "generators of the wall kernel");
  add_input(kappa_cmd);
  std::string wall, chamber;
  kappa_cmd->add_option("--wall", wall, "point face D:j")->required();
  kappa_cmd->add_option("--chamber", chamber, "interval face C:k adjacent to the wall")->required();

  auto* quiver_cmd = app.add_subcommand("quiver", "quiver representation checks");
  auto* qcheck = quiver_cmd->add_subcommand("check", "relations, stability, stratum and base point");
  quiver_cmd->require_subcommand(1);
  std::string rep_path, stability = "theta1";
  qcheck->add_option("--rep", rep_path, "QuiverRep JSON")->required();
  qcheck->add_option("--stability", stability, "theta1 or theta2")
      ->check(CLI::IsMember({"theta1", "theta2"}));

  auto* nc_cmd = app.add_subcommand("ncalg", "graded noncommutative algebra");
  nc_cmd->require_subcommand(1);
  std::string algebra = "acon", expr;
  long max_degree = 0;
  auto* hilb = nc_cmd->add_subcommand("hilbert", "graded dimensions");
  auto* nf = nc_cmd->add_subcommand("normal-form", "reduce an expression");
  for (auto* s : {hilb, nf}) {
    s->add_option("--algebra", algebra, "catalog name")->check(CLI::IsMember(nc::catalog_names()));
    s->add_option("--max-degree", max_degree, "degree cutoff");
  }
  nf->add_option("--expr", expr, "expression, e.g. t*(beta*gamma - gamma*beta)")->required();

  auto* coh_cmd = app.add_subcommand("coh", "GL2 characters");
  coh_cmd->require_subcommand(1);
  auto* mult = coh_cmd->add_subcommand("multiplicity", "multiplicity of an irreducible in Sym of a sum");
  std::string irrep = "0,-1", sym;
  mult->add_option("--irrep", irrep, "highest weight \"p,q\" or a name (V, Vstar, D, O, S2Vm1)");
  mult->add_option("--sym", sym, "comma-separated summands")->required();
  mult->add_option("--max-degree", max_degree, "degree cutoff");

  auto* ver = app.add_subcommand("verify", "run a named check suite");
  std::string suite = "all";
  bool ver_json = false;
  ver->add_option("--suite", suite, "polyhedral, algebra, cohomology, quiver or all")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_flag("--json", ver_json, "JSON report on stdout, timings on stderr");

  auto* fig = app.add_subcommand("figures", "write SVG figures");
  add_input(fig);
  std::string out_dir = ".";
  fig->add_option("--out-dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*skms_cmd) {
      const auto p = input_presentation(input);
      print(io::skms_json(nabla(p), skms(p)));
      return kOk;
    }

    if (*win_cmd) {
      const auto p = input_presentation(input);
      auto one = [&](const FaceRef& f) { return f.kind == FaceKind::Interval ? window(p, f) : big_window(p, f); };
      if (!face.empty()) {
        auto w = one(FaceRef::parse(face));
        if (win_json)
          print(io::window_json(w));
        else
          std::cout << w.label << "\n";
        return kOk;
      }
      json table = json::array();
      for (long j = jmin; j <= jmax; ++j) {
        auto c = window(p, {FaceKind::Interval, j});
        auto d = big_window(p, {FaceKind::Point, j});
        if (win_json) {
          table.push_back(io::window_json(c));
          table.push_back(io::window_json(d));
        } else {
          std::cout << "C:" << j << "  " << c.label << "\n" << "D:" << j << "  " << d.label << "\n";
        }
      }
      if (win_json) print(table);
      return kOk;
    }

    if (*kappa_cmd) {
      const auto p = input_presentation(input);
      print(io::kappa_json(kappa_generators(p, FaceRef::parse(wall), FaceRef::parse(chamber))));
      return kOk;
    }

    if (*qcheck) {
      const auto r = io::rep_from_json(io::load_json(rep_path));
      json out;
      out["rep"] = io::to_json(r);
      const auto rel = quiver::relations_hold(r);
      out["relations_hold"] = rel.holds;
      out["violated"] = json::array();
      for (const auto& [name, m] : rel.residuals) out["violated"].push_back(name);
      if (!rel.holds) {
        print(out);
        return kCheckFailed;
      }
      const auto s = stability == "theta1" ? quiver::Stability::Theta1 : quiver::Stability::Theta2;
      out["stability"] = stability;
      out["semistable"] = quiver::is_semistable(r, s);
      out["stratum"] = quiver::to_string(quiver::stratum(r));
      // the invariant coordinates are written for trace-free loops
      if (quiver::trace(r.beta) != 0 || quiver::trace(r.gamma) != 0) {
        out["base_point"] = nullptr;
        out["note"] = "base map needs trace-free beta and gamma";
        print(out);
        return kOk;
      }
      const auto b = quiver::base_map(r);
      out["base_point"] = io::to_json(b);
      out["base_equation"] = io::str(quiver::base_equation(b));
      const auto sl = quiver::singular_locus_check(b);
      out["singular_locus"] = sl.on_singular_locus();
      out["in_Z1"] = sl.in_z1;
      out["in_Z2"] = sl.in_z2;
      print(out);
      return quiver::base_equation(b) == 0 ? kOk : kCheckFailed;
    }

    if (*hilb) {
      const long d = max_degree > 0 ? max_degree : env_degree(12);
      json out;
      out["algebra"] = algebra;
      out["max_degree"] = d;
      out["dims"] = nc::hilbert(nc::catalog(algebra), d);
      print(out);
      return kOk;
    }

    if (*nf) {
      const auto pres = nc::catalog(algebra);
      const nc::Poly e = nc::parse(expr, pres);
      const long deg = std::max<long>(1, e.is_zero() ? 1 : pres.homogeneous_degree(e));
      const long d = max_degree > 0 ? max_degree : std::max(deg, env_degree(12));
      nc::RewriteSystem rs(pres, d);
      json out;
      out["algebra"] = algebra;
      out["expr"] = expr;
      out["normal_form"] = pres.render(rs.normal_form(e));
      print(out);
      return kOk;
    }

    if (*mult) {
      const long d = max_degree > 0 ? max_degree : env_degree(15);
      std::vector<coh::Irrep> summands;
      for (const auto& s : split(sym, ','))
        if (!s.empty()) summands.push_back(coh::parse_irrep(s));
      const auto w = coh::parse_irrep(irrep);
      json out;
      out["irrep"] = {w.p, w.q};
      out["max_degree"] = d;
      out["dims"] = coh::multiplicity(w, coh::sym_graded(summands, d));
      print(out);
      return kOk;
    }

    if (*ver) {
      auto t0 = std::chrono::steady_clock::now();
      auto report = verify::run_suite(suite, verify::Cutoffs::from_env(), [&](const verify::Check& c) {
        std::ostream& os = ver_json ? std::cerr : std::cout;
        os << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name << ": " << c.details << " ("
           << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
      });
      const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (ver_json) print(report.to_json());
      (ver_json ? std::cerr : std::cout) << (report.ok() ? "ALL PASS" : "FAILURES") << " (" << std::fixed
                                         << std::setprecision(3) << total << " s)\n";
      return report.ok() ? kOk : kCheckFailed;
    }

    if (*fig) {
      const auto p = input_presentation(input, true);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      for (const auto& f : svg::figures(p)) {
        const auto path = std::filesystem::path(out_dir) / f.filename;
        std::ofstream os(path);
        if (!os || !(os << f.content)) {
          std::cerr << "error: cannot write " << path.string() << "\n";
          return kUsage;
        }
        std::cout << path.string() << "\n";
      }
      return kOk;
    }
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
