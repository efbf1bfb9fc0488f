// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neumann_table.hpp"
#include "robin/courant.hpp"
#include "robin/critical.hpp"
#include "robin/nodal.hpp"
#include "robin/spectrum.hpp"

using namespace robin;

namespace {

const double kPi = 3.141592653589793;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (ok) why << msg;
      else why << "; " << msg;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, dt,
              c.ok ? "" : " -- ", c.ok ? "" : c.why.str().c_str());
  std::fflush(stdout);
}

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// every certified count made here is checked against mu_out <= 4 sqrt(lambda)
int outer_violations = 0;
int certified_counts = 0;

NodalCountResult counted(const ThetaFamily& f, const CountOptions& o = {}) {
  NodalCountResult r = count_nodal_domains(f, o);
  if (r.certified) {
    ++certified_counts;
    if (f.eigenvalue() > 0 && r.mu_out > 4 * std::sqrt(f.eigenvalue()) + 1e-9) ++outer_violations;
  }
  return r;
}

ScanReport scan_h0, scan_h001;
double scan_seconds = 0.0;

}  // namespace

int main() {
  report(1, "Neumann label table up to 146", [](Check& c) {
    const auto t0 = Clock::now();
    const SpectrumTable t = build_spectrum(0.0, 146.0);
    for (const NeumannRow& r : kNeumannRows) {
      const auto idx = t.level_index_of_pair({r.m, r.n});
      if (!idx) {
        c.expect(false, "missing pair " + std::to_string(r.m) + "," + std::to_string(r.n));
        continue;
      }
      const EigenLevel& lv = t.levels[*idx];
      c.expect(lv.value == r.value && lv.label_lo == r.k_lo && lv.label_hi == r.k_hi,
               "row " + std::to_string(r.m) + "," + std::to_string(r.n));
    }
    c.expect(t.label_count() == static_cast<int>(std::size(kNeumannRows)), "extra labels");
    c.expect(seconds_since(t0) < 1.0, "slower than 1 s");
  });

  report(2, "global thresholds 209 / 520", [](Check& c) {
    c.expect(global_bound_threshold(true) == 209, "neumann threshold " + std::to_string(global_bound_threshold(true)));
    c.expect(neumann_bound_holds(208), "n = 208 inequality");
    bool all = true;
    for (int n = 520; n <= 20000; ++n) all = all && !h_uniform_bound_holds(n);
    c.expect(all, "h-uniform chain leaves some k >= 520");
    c.expect(global_bound_threshold(false) <= 520, "h-uniform threshold above 520");
  });

  report(3, "Pleijel elimination list at h = 0", [](Check& c) {
    std::set<int> want = {86, 95, 96, 99, 100, 103, 104, 113, 118, 119, 120, 121};
    for (int n = 128; n <= 142; ++n) want.insert(n);
    for (int n = 147; n <= 208; ++n) want.insert(n);
    const SpectrumTable t = build_spectrum(0.0, 300.0);
    std::set<int> got;
    for (int n = 1; n <= 208; ++n)
      if (pleijel_check(t, n).eliminated) got.insert(n);
    std::set<int> extra, missing;
    for (int n : got)
      if (!want.count(n)) extra.insert(n);
    for (int n : want)
      if (!got.count(n)) missing.insert(n);
    c.expect(extra.empty(), "eliminated but not listed " + set_str(extra));
    c.expect(missing.empty(), "listed but not eliminated " + set_str(missing));
  });

  report(4, "Leydold anchors", [](Check& c) {
    const SpectrumTable t = build_spectrum(0.0, 150.0);
    const struct {
      int n;
      Subspace s;
      int m, bound;
    } anchors[] = {{76, Subspace::ARot, 37, 74}, {46, Subspace::SRot, 22, 44}, {46, Subspace::AMir, 9, 36}};
    for (const auto& a : anchors) {
      const RuleResult r = leydold_bound(t, a.n, a.s);
      const std::string tag = std::to_string(a.n) + " " + subspace_name(a.s);
      c.expect(r.applicable, tag + " not applicable");
      if (!r.applicable) continue;
      c.expect(int(r.evidence.at("m")) == a.m, tag + " m=" + std::to_string(int(r.evidence.at("m"))));
      c.expect(int(r.evidence.at("mu_bound")) == a.bound && r.eliminated, tag + " bound");
    }
  });

  report(5, "headline nodal counts and product rule", [](Check& c) {
    const auto t0 = Clock::now();
    const struct {
      int p, q;
      double theta;
      int mu;
    } cases[] = {{0, 2, kPi / 4, 5}, {3, 3, 0.7, 16}, {7, 9, std::atan(7.0 / 9.0), 32}, {0, 3, kPi / 4, 8}};
    for (const auto& k : cases) {
      const NodalCountResult r = counted(ThetaFamily(k.p, k.q, k.theta, 0.0));
      c.expect(r.certified && r.mu == k.mu, "(" + std::to_string(k.p) + "," + std::to_string(k.q) +
                                                ") mu=" + std::to_string(r.mu));
    }
    for (int p = 0; p <= 9; ++p)
      for (int q = 0; q <= 9; ++q) {
        const NodalCountResult r = counted(ThetaFamily(p, q, 0.0, 0.0));
        c.expect(r.certified && r.mu == (p + 1) * (q + 1),
                 "product (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    c.expect(seconds_since(t0) < 60.0, "slower than 60 s");
  });

  report(6, "(0,2) transitions at h = 0.01", [](Check& c) {
    const TransitionTable t = transition_table_02(0.01);
    const int want[] = {3, 2, 3, 4, 3};
    c.expect(t.rows.size() == 5, "row count");
    for (std::size_t k = 0; k < t.rows.size() && k < 5; ++k)
      c.expect(t.rows[k].matches && t.rows[k].expected_mu == want[k], "row " + t.rows[k].region);
    const double d = critical_theta_02(0.01).theta1 - kPi / 4;
    c.expect(std::fabs(d + kPi * 0.01 / 8) <= 5e-4, "theta1 slope");
    for (double h : {0.005, 0.01, 0.05}) {
      ScanOptions o;
      o.h = h;
      o.n_max = 5;
      const ScanReport r = courant_scan(o);
      c.expect(r.verdicts[4].status == Status::not_courant_sharp, "n=5 at h=" + std::to_string(h));
    }
  });

  report(7, "(0,3) critical point and table at h = 0.01", [](Check& c) {
    const Theta03 t3 = critical_theta_03(0.01);
    c.expect(std::fabs(t3.y_c - 0.5236) <= 5e-4, "y_c=" + std::to_string(t3.y_c));
    const TransitionTable t = transition_table_03(0.01);
    const int mu[] = {4, 4, 2, 4}, bd[] = {6, 4, 2, 2}, in[] = {0, 0, 0, 2};
    c.expect(t.rows.size() == 4, "row count");
    for (std::size_t k = 0; k < t.rows.size() && k < 4; ++k) {
      const TableRow& r = t.rows[k];
      c.expect(r.matches && r.expected_mu == mu[k] && r.expected_boundary == bd[k] && r.expected_interior == in[k],
               "row " + r.region);
    }
  });

  // full scans feed criteria 8 and 9
  {
    ScanOptions o;
    o.jobs = 1;
    const auto t0 = Clock::now();
    o.h = 0.0;
    scan_h0 = courant_scan(o);
    o.h = 0.01;
    scan_h001 = courant_scan(o);
    scan_seconds = seconds_since(t0);
  }

  report(8, "(7,9) Sturm window, budget 36, label 116", [](Check& c) {
    for (double theta : {0.3, std::atan(7.0 / 9.0), 1.2, 2.5})
      for (Side s : all_sides) {
        const int z = boundary_zeros(ThetaFamily(7, 9, theta, 0.0), s).count();
        c.expect(z >= 7 && z <= 9, std::string("zeros on ") + side_name(s) + " = " + std::to_string(z));
      }
    const int base = counted(ThetaFamily(7, 9, std::atan(7.0 / 9.0), 0.0)).mu;
    for (double h : {0.01, 0.1}) {
      const NodalCountResult r = counted(ThetaFamily(7, 9, std::atan(7.0 / 9.0), h));
      c.expect(r.certified && r.mu <= 36 && r.mu <= base + 4, "mu=" + std::to_string(r.mu));
    }
    c.expect(scan_h001.verdicts[115].status == Status::not_courant_sharp, "116 not eliminated at h=0.01");
  });

  report(9, "global scans at h = 0 and h = 0.01", [](Check& c) {
    std::printf("  scans took %.1fs single-threaded\n", scan_seconds);
    c.expect(scan_seconds / 2 < 600.0, "scan slower than 10 min");
    std::set<int> sharp0, sharp1;
    for (const CourantVerdict& v : scan_h0.verdicts) {
      if (v.status == Status::courant_sharp) sharp0.insert(v.n);
      c.expect(v.status != Status::undecided || v.evidence.count("numeric_inapplicable"),
               "h=0 undecided " + std::to_string(v.n));
    }
    for (const CourantVerdict& v : scan_h001.verdicts) {
      if (v.status == Status::courant_sharp) sharp1.insert(v.n);
      c.expect(v.status != Status::undecided || v.evidence.count("numeric_inapplicable"),
               "h=0.01 undecided " + std::to_string(v.n));
    }
    c.expect(sharp0 == std::set<int>{1, 2, 4, 5, 9}, "h=0 sharp " + set_str(sharp0));
    for (int n : sharp1) c.expect(n == 1 || n == 2 || n == 4 || n == 9, "h=0.01 sharp " + std::to_string(n));
    c.expect(!sharp1.count(5), "5 sharp at h=0.01");
    c.expect(scan_h0.contradictions.empty() && scan_h001.contradictions.empty(), "scan contradictions");
  });

  report(10, "property suites", [](Check& c) {
    for (int n = 0; n <= 30; ++n)
      for (double h : {1e-3, 1e-2, 0.1, 1.0}) {
        const AlphaBranch b = solve_alpha(n, h);
        const double e = kPi / 2;
        c.expect(std::fabs(eval_u_derivative(b, e) + h * eval_u(b, e)) <= 1e-9 &&
                     std::fabs(-eval_u_derivative(b, -e) + h * eval_u(b, -e)) <= 1e-9,
                 "Robin residual n=" + std::to_string(n));
      }

    // 200 families: p < q <= 6 at four generic thetas and two h values
    int families = 0;
    for (int p = 0; p <= 5 && families < 200; ++p)
      for (int q = p + 1; q <= 9 && families < 200; ++q)
        for (double h : {0.0, 0.01})
          for (double theta : {0.17, 0.41, 0.63, 1.0, 1.3}) {
            if (families >= 200) break;
            ++families;
            const ThetaFamily f(p, q, theta, h), g(p, q, kPi / 2 - theta, h);
            const NodalCountResult a = counted(f), b = counted(g);
            bool ok = a.mu == b.mu;
            if ((p + q) % 2 == 1) {
              const NodalCountResult flip = counted(ThetaFamily(p, q, kPi - theta, h));
              ok = ok && flip.mu == a.mu && a.mu % 2 == 0;
            }
            c.expect(ok, "symmetry (" + std::to_string(p) + "," + std::to_string(q) + ") theta=" +
                             std::to_string(theta));
          }
    c.expect(families == 200, "family count");
    c.expect(outer_violations == 0, std::to_string(outer_violations) + " counts with mu_out > 4 sqrt(lambda)");
    c.expect(certified_counts > 0, "no certified counts");

    const double hs[] = {0.0, 0.005, 0.01, 0.05, 0.1};
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j) {
        if (i * i + j * j > 150) continue;
        for (int k = 1; k < 5; ++k)
          c.expect(pair_eigenvalue(i, j, hs[k]) > pair_eigenvalue(i, j, hs[k - 1]), "monotonicity");
      }

    std::vector<IndexPair> pairs;
    for (int i = 0; i * i <= 50; ++i)
      for (int j = i; i * i + j * j <= 50; ++j) pairs.push_back({i, j});
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        const CrossingResult r = find_crossing(pairs[a], pairs[b], 2.0);
        c.expect(!r.contradiction && r.ordering_holds,
                 "crossing (" + std::to_string(pairs[a].i) + "," + std::to_string(pairs[a].j) + ") vs (" +
                     std::to_string(pairs[b].i) + "," + std::to_string(pairs[b].j) + ")");
      }
  });

  return failures;
}
