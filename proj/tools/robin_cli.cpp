// robin: command-line front end for the Robin square toolkit.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "robin/angle.hpp"
#include "robin/contour.hpp"
#include "robin/courant.hpp"
#include "robin/critical.hpp"
#include "robin/io.hpp"
#include "robin/roots.hpp"
#include "robin/nodal.hpp"
#include "robin/spectrum.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kUncertified = 3;
constexpr int kSolver = 4;
constexpr int kContradiction = 5;

struct Global {
  double h = 0.0;
  std::string out = "-";
  std::string format;
  int level = 9;
  int jobs = 1;
  bool seedless = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes the buffered payload in one go so partial output never lands on disk.
void emit(const Global& g, const std::string& payload) {
  if (g.out == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + g.out);
  f << payload;
}

std::string pick_format(const Global& g, const char* fallback, std::initializer_list<const char*> allowed) {
  std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("unsupported --format " + f);
}

robin::CountOptions count_options(const Global& g, int max_level, int refine) {
  robin::CountOptions o;
  o.level = g.level;
  o.max_level = max_level > 0 ? max_level : g.level + 2;
  o.refine_levels = refine;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robin Laplacian on the square: spectrum, nodal counts, Courant-sharp scan"};
  app.require_subcommand(1);
  // -h would clash with --h
  app.set_help_flag("--help", "print help and exit");
  app.fallthrough();

  Global g;
  app.add_option("--h", g.h, "Robin parameter h");
  app.add_option("--out", g.out, "output path, - for stdout");
  app.add_option("--format", g.format, "csv | json | svg");
  app.add_option("--level", g.level, "base grid level (grid 2^level + 1)")->check(CLI::Range(6, 13));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--seedless", g.seedless, "accepted for compatibility; nothing is random");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "sorted 2D spectrum with labels");
  double lambda_max = 0.0, cluster_tol = robin::default_cluster_tol;
  spec->add_option("--lambda-max", lambda_max, "eigenvalue cutoff")->required();
  spec->add_option("--cluster-tol", cluster_tol, "merge tolerance for multiplicity clusters");

  // count
  auto* count = app.add_subcommand("count", "nodal domain count of one theta-family");
  int p = 0, q = 0, max_level = 0, refine = 2;
  std::string theta_text = "0", svg_path;
  count->add_option("--p", p, "first index")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--q", q, "second index")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--theta", theta_text, "angle: 0.3, pi/4, 3pi/4, atan:7/9");
  count->add_option("--max-level", max_level, "highest level tried for certification");
  count->add_option("--refine", refine, "extra refinement levels for mixed cells")->check(CLI::Range(0, 4));
  count->add_option("--svg", svg_path, "also write the nodal set as SVG");

  // scan
  auto* scan = app.add_subcommand("scan", "Courant-sharp verdicts for labels 1..n-max");
  int n_max = 208, theta_samples = 97;
  bool no_symmetry = false;
  scan->add_option("--n-max", n_max, "largest label")->check(CLI::Range(1, 208));
  scan->add_option("--theta-samples", theta_samples, "uniform theta samples on [0, pi)")->check(CLI::Range(1, 10000));
  scan->add_flag("--no-symmetry", no_symmetry, "do not fold theta -> pi/2 - theta");

  // critical
  auto* crit = app.add_subcommand("critical", "boundary and corner zero critical points");
  int cp = 0, cq = 0;
  crit->add_option("--p", cp, "first index")->required()->check(CLI::NonNegativeNumber);
  crit->add_option("--q", cq, "second index")->required()->check(CLI::NonNegativeNumber);

  // contour
  auto* cont = app.add_subcommand("contour", "nodal set polylines as SVG or CSV");
  int kp = 0, kq = 0;
  std::vector<std::string> thetas{"0"};
  cont->add_option("--p", kp, "first index")->required()->check(CLI::NonNegativeNumber);
  cont->add_option("--q", kq, "second index")->required()->check(CLI::NonNegativeNumber);
  cont->add_option("--theta", thetas, "one or more angles")->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*spec) {
      const std::string fmt = pick_format(g, "csv", {"csv", "json"});
      robin::SpectrumTable t = robin::build_spectrum(g.h, lambda_max, cluster_tol);
      if (fmt == "csv") {
        std::ostringstream os;
        robin::write_spectrum_csv(os, t);
        emit(g, os.str());
      } else {
        emit(g, robin::spectrum_json(t));
      }
      return 0;
    }

    if (*count) {
      pick_format(g, "json", {"json"});
      const double theta = robin::normalize_theta(robin::parse_theta(theta_text));
      robin::ThetaFamily f(p, q, theta, g.h);
      robin::NodalCountResult r = robin::count_nodal_domains(f, count_options(g, max_level, refine));
      emit(g, robin::count_json(r));
      if (!svg_path.empty()) {
        std::ofstream s(svg_path, std::ios::binary);
        if (!s) throw UsageError("cannot open " + svg_path);
        robin::write_contours_svg(s, {robin::nodal_contours(f, g.level)});
      }
      return r.certified ? 0 : kUncertified;
    }

    if (*scan) {
      const std::string fmt = pick_format(g, "json", {"json", "csv"});
      robin::ScanOptions o;
      o.h = g.h;
      o.n_max = n_max;
      o.theta_samples = theta_samples;
      o.use_symmetry = !no_symmetry;
      o.jobs = g.jobs;
      o.count = count_options(g, 0, 2);
      robin::ScanReport r = robin::courant_scan(o);
      if (fmt == "json") {
        emit(g, robin::verdicts_json(r));
      } else {
        std::ostringstream os;
        robin::write_verdicts_csv(os, r);
        emit(g, os.str());
      }
      for (const auto& c : r.contradictions)
        std::fprintf(stderr, "contradiction [%s] %s\n", c.rule.c_str(), c.detail.c_str());
      return r.contradictions.empty() ? 0 : kContradiction;
    }

    if (*crit) {
      pick_format(g, "json", {"json"});
      if (cp == cq) throw UsageError("critical needs p != q");
      robin::CriticalReport rep;
      rep.p = cp;
      rep.q = cq;
      rep.h = g.h;
      rep.points = robin::all_boundary_critical_points(cp, cq, g.h);
      auto corners = robin::corner_critical_points(cp, cq, g.h);
      rep.points.insert(rep.points.end(), corners.begin(), corners.end());
      const int lo = std::min(cp, cq), hi = std::max(cp, cq);
      if (lo == 0 && hi == 2 && g.h <= 0.2) rep.theta02 = robin::critical_theta_02(g.h);
      if (lo == 0 && hi == 3 && g.h <= 0.2) rep.theta03 = robin::critical_theta_03(g.h);
      emit(g, robin::critical_json(rep));
      return 0;
    }

    if (*cont) {
      const std::string fmt = pick_format(g, "svg", {"svg", "csv"});
      std::vector<robin::ContourSet> sets;
      for (const auto& t : thetas) {
        robin::ThetaFamily f(kp, kq, robin::normalize_theta(robin::parse_theta(t)), g.h);
        sets.push_back(robin::nodal_contours(f, g.level));
      }
      std::ostringstream os;
      if (fmt == "svg") robin::write_contours_svg(os, sets);
      else robin::write_contours_csv(os, sets);
      emit(g, os.str());
      return 0;
    }
  } catch (const robin::SolverFailure& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kSolver;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
