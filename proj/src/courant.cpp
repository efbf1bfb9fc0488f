#include "robin/courant.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "robin/angle.hpp"
#include "robin/bessel.hpp"

namespace robin {

const char* status_name(Status s) {
  switch (s) {
    case Status::courant_sharp: return "courant_sharp";
    case Status::not_courant_sharp: return "not_courant_sharp";
    case Status::undecided: return "undecided";
  }
  return "?";
}

const char* subspace_name(Subspace s) {
  switch (s) {
    case Subspace::ARot: return "ARot";
    case Subspace::SRot: return "SRot";
    case Subspace::AMir: return "AMir";
  }
  return "?";
}

// -- global thresholds ------------------------------------------------------

double neumann_bound_rhs(int n) {
  const double j = first_bessel_zero();
  return 4.0 / (j * j) * (n - 1) + 8.0 / std::sqrt(pi) * std::sqrt(double(n - 1));
}

bool neumann_bound_holds(int n) { return n < neumann_bound_rhs(n); }

bool h_uniform_bound_holds(int n) {
  // n > (pi/4) lambda - 2 sqrt(lambda) + 2 caps sqrt(lambda) from above
  const double s = (2.0 + std::sqrt(4.0 + pi * (n - 2))) * 2.0 / pi;
  const double j = first_bessel_zero();
  return n <= pi / (j * j) * s * s + 4.0 * s;
}

int global_bound_threshold(bool neumann) {
  // Both right-hand sides grow like c n with c < 1, so past some point the
  // inequality fails for good; scan far beyond it and take the last survivor.
  constexpr int far = 100000;
  int last = 1;
  for (int n = 2; n <= far; ++n)
    if (neumann ? neumann_bound_holds(n) : h_uniform_bound_holds(n)) last = n;
  return last + 1;
}

// -- rule fragments ---------------------------------------------------------

RuleResult pleijel_check(const SpectrumTable& t, int n) {
  RuleResult r;
  r.applicable = true;
  const EigenLevel& lvl = t.level_of_label(n);
  const int jn = jn_value(t, n).j_n;
  const double j = first_bessel_zero();
  // Courant-sharpness can only happen at the first label of a cluster, and
  // the inequality is tested there for the whole cluster.
  const double bound = pi / (j * j) * lvl.value + std::max(4.0 * jn, 1.0);
  r.eliminated = bound < lvl.label_lo;
  r.evidence = {{"lambda", lvl.value}, {"j_n", double(jn)}, {"pleijel_bound", bound},
                {"label_lo", double(lvl.label_lo)}};
  return r;
}

bool in_subspace(Subspace s, IndexPair p) {
  switch (s) {
    case Subspace::ARot: return (p.i + p.j) % 2 == 1;
    case Subspace::SRot: return (p.i + p.j) % 2 == 0;
    case Subspace::AMir: return p.i % 2 == 1 && p.j % 2 == 1;
  }
  return false;
}

int subspace_rank(const SpectrumTable& t, int n, Subspace s) {
  const std::size_t idx = t.level_index_of_label(n);
  int m = 1;
  for (std::size_t k = 0; k < idx; ++k)
    for (const auto& p : t.levels[k].pairs)
      if (in_subspace(s, p)) ++m;
  return m;
}

RuleResult leydold_bound(const SpectrumTable& t, int n, Subspace s) {
  RuleResult r;
  const EigenLevel& lvl = t.level_of_label(n);
  r.applicable = std::all_of(lvl.pairs.begin(), lvl.pairs.end(),
                             [&](IndexPair p) { return in_subspace(s, p); });
  if (!r.applicable) return r;
  const int m = subspace_rank(t, n, s);
  const int bound = (s == Subspace::AMir ? 4 : 2) * m;
  r.eliminated = bound < n;
  r.evidence = {{"m", double(m)}, {"mu_bound", double(bound)}};
  return r;
}

int folding_bound(int p, int q, int known_mu_half) {
  return 4 * known_mu_half - (4 * std::min(p / 2, q / 2) + 3);
}

RuleResult pp_rule(const SpectrumTable& t, int n) {
  RuleResult r;
  const EigenLevel& lvl = t.level_of_label(n);
  if (lvl.multiplicity() != 1 || lvl.pairs[0].i != lvl.pairs[0].j) return r;
  r.applicable = true;
  const int p = lvl.pairs[0].i;
  const int mu = (p + 1) * (p + 1);
  r.eliminated = mu < n;
  r.evidence = {{"p", double(p)}, {"mu", double(mu)}};
  return r;
}

// -- scan -------------------------------------------------------------------

namespace {

double canonical_theta(double t) {
  // mu(theta) = mu(pi/2 - theta): keep [0, pi/4] and [pi/2, 3 pi/4]
  t = normalize_theta(t);
  if (t > 0.25 * pi && t < 0.5 * pi) return 0.5 * pi - t;
  if (t > 0.75 * pi) return normalize_theta(0.5 * pi - t);
  return t;
}

SpectrumTable scan_table(double h, int n_max) {
  double lam = 4.0 / pi * n_max + 60.0;
  for (;;) {
    SpectrumTable t = build_spectrum(h, lam);
    if (t.label_count() > n_max) return t;
    lam *= 1.5;
  }
}

struct Task {
  std::size_t verdict;
  int p, q;
  double theta;
};

struct TaskResult {
  int mu = 0;
  bool certified = false;
  std::optional<Contradiction> contradiction;
};

}  // namespace

std::vector<double> scan_thetas(int p, int q, double h, int samples, bool use_symmetry) {
  std::vector<double> th;
  if (p == q) return {0.0};
  for (int k = 0; k < samples; ++k) th.push_back(pi * k / samples);
  for (double t : corner_zero_thetas(p, q, h)) th.push_back(t);
  for (const auto& c : all_boundary_critical_points(p, q, h)) th.push_back(c.theta_star);
  for (double& t : th) t = use_symmetry ? canonical_theta(t) : normalize_theta(t);
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  return th;
}

ScanReport courant_scan(const ScanOptions& o) {
  if (!(o.h >= 0.0 && o.h <= 0.1)) throw std::domain_error("courant_scan: h outside [0, 0.1]");
  if (o.n_max < 1 || o.n_max > 208) throw std::domain_error("courant_scan: n_max outside [1, 208]");

  const SpectrumTable t = scan_table(o.h, o.n_max);
  const int threshold = global_bound_threshold(true);
  ScanReport rep;
  rep.h = o.h;
  rep.verdicts.resize(o.n_max);

  auto eliminate = [](CourantVerdict& v, const char* id, const RuleResult& r) {
    v.fired.push_back(id);
    for (const auto& [k, x] : r.evidence) v.evidence[std::string(id) + "." + k] = x;
    if (v.decided_by.empty()) {
      v.decided_by = id;
      v.status = Status::not_courant_sharp;
    }
  };

  for (int n = 1; n <= o.n_max; ++n) {
    CourantVerdict& v = rep.verdicts[n - 1];
    v.n = n;
    v.h = o.h;
    const EigenLevel& lvl = t.level_of_label(n);
    v.evidence["lambda"] = lvl.value;
    v.evidence["multiplicity"] = lvl.multiplicity();

    if (n == 1 || n == 2 || n == 4) {
      v.status = Status::courant_sharp;
      v.decided_by = rule::known_case;
      continue;
    }
    if (n >= threshold) {
      RuleResult g{true, true, {{"threshold", double(threshold)}}};
      eliminate(v, rule::global_bound, g);
    }
    if (auto r = pleijel_check(t, n); r.eliminated) eliminate(v, rule::pleijel, r);

    RuleResult ley[3];
    const Subspace subs[3] = {Subspace::ARot, Subspace::SRot, Subspace::AMir};
    const char* ids[3] = {rule::leydold_arot, rule::leydold_srot, rule::leydold_amir};
    for (int s = 0; s < 3; ++s) {
      ley[s] = leydold_bound(t, n, subs[s]);
      if (ley[s].eliminated) eliminate(v, ids[s], ley[s]);
    }

    // folding: theta-family with p != q both even, spanning the eigenspace
    if (lvl.multiplicity() == 2) {
      const IndexPair a = lvl.pairs[0];
      if (a.i != a.j && a.i % 2 == 0 && a.j % 2 == 0) {
        const int hp = a.i / 2, hq = a.j / 2;
        auto hidx = t.level_index_of_pair({hp, hq});
        if (hidx) {
          const EigenLevel& half = t.levels[*hidx];
          const int hl = half.label_lo;
          const CourantVerdict& hv = rep.verdicts[hl - 1];
          int known = hv.status == Status::not_courant_sharp ? hl - 1 : hl;
          for (int s = 0; s < 3; ++s) {
            RuleResult hl_r = leydold_bound(t, hl, subs[s]);
            if (hl_r.applicable) known = std::min(known, int(hl_r.evidence["mu_bound"]));
          }
          const int bound = folding_bound(a.i, a.j, known);
          RuleResult f{true, bound < n,
                       {{"half_label", double(hl)}, {"known_mu_half", double(known)},
                        {"mu_bound", double(bound)}}};
          if (f.eliminated) eliminate(v, rule::folding, f);
        }
      }
    }

    RuleResult pp = pp_rule(t, n);
    if (pp.eliminated) eliminate(v, rule::pp, pp);

    if (ley[0].applicable && n % 2 == 1)
      eliminate(v, rule::parity, {true, true, {{"subspace_ARot_odd", 1.0}}});
    if (ley[2].applicable && n % 4 != 0)
      eliminate(v, rule::parity, {true, true, {{"subspace_AMir_mod4", double(n % 4)}}});

    if (n > lvl.label_lo)
      eliminate(v, rule::courant_bound, {true, true, {{"label_lo", double(lvl.label_lo)}}});
  }

  // numeric counts for the labels no bound settled
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < rep.verdicts.size(); ++k) {
    CourantVerdict& v = rep.verdicts[k];
    if (v.status != Status::undecided) continue;
    const EigenLevel& lvl = t.level_of_label(v.n);
    if (lvl.multiplicity() > 2) {
      v.evidence["numeric_inapplicable"] = 1.0;
      continue;
    }
    IndexPair a = lvl.pairs.front();
    if (a.i > a.j) std::swap(a.i, a.j);
    for (double th : scan_thetas(a.i, a.j, o.h, o.theta_samples, o.use_symmetry))
      tasks.push_back({k, a.i, a.j, th});
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      const Task& tk = tasks[k];
      NodalCountResult r = count_nodal_domains(ThetaFamily(tk.p, tk.q, tk.theta, o.h), o.count);
      results[k] = {r.mu, r.certified, r.contradiction};
    }
  };
  const int jobs = std::max(1, o.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < tasks.size();) {
    CourantVerdict& v = rep.verdicts[tasks[k].verdict];
    int max_cert = 0, max_any = 0, uncertified = 0, probes = 0;
    double argmax = 0.0;
    std::size_t m = k;
    for (; m < tasks.size() && tasks[m].verdict == tasks[k].verdict; ++m) {
      const TaskResult& r = results[m];
      ++probes;
      max_any = std::max(max_any, r.mu);
      if (r.certified) {
        if (r.mu > max_cert) argmax = tasks[m].theta;
        max_cert = std::max(max_cert, r.mu);
      } else {
        ++uncertified;
      }
      if (r.contradiction && !v.contradiction) v.contradiction = r.contradiction;
    }
    v.evidence["numeric.theta_probes"] = probes;
    v.evidence["numeric.max_certified_mu"] = max_cert;
    v.evidence["numeric.max_mu"] = max_any;
    v.evidence["numeric.uncertified"] = uncertified;
    v.evidence["numeric.argmax_theta"] = argmax;
    if (max_cert > v.n) {
      char buf[120];
      std::snprintf(buf, sizeof buf, "certified mu=%d exceeds label %d", max_cert, v.n);
      v.contradiction = Contradiction{"courant-bound", buf};
    } else if (max_cert == v.n) {
      v.status = Status::courant_sharp;
      v.decided_by = rule::numeric;
    } else if (max_any < v.n) {
      v.status = Status::not_courant_sharp;
      v.decided_by = rule::numeric;
      v.fired.push_back(rule::numeric);
    }
    k = m;
  }

  for (const auto& v : rep.verdicts)
    if (v.contradiction) rep.contradictions.push_back(*v.contradiction);
  return rep;
}

// -- case tables ------------------------------------------------------------

namespace {

TableProbe probe(int p, int q, double theta, double h, const CountOptions& opts) {
  ThetaFamily f(p, q, theta, h);
  NodalCountResult r = count_nodal_domains(f, opts);
  TableProbe tp;
  tp.theta = theta;
  tp.mu = r.mu;
  tp.certified = r.certified;
  tp.boundary_points = boundary_zero_points(f, opts.boundary_samples);
  tp.interior_points = static_cast<int>(interior_zero_critical_points(f).size());
  return tp;
}

void finish(TransitionTable& tab, const char* name) {
  for (auto& row : tab.rows) {
    for (const auto& pr : row.probes) {
      bool ok = pr.mu == row.expected_mu;
      if (row.expected_boundary >= 0) ok = ok && pr.boundary_points == row.expected_boundary;
      if (row.expected_interior >= 0) ok = ok && pr.interior_points == row.expected_interior;
      if (!ok) {
        row.matches = false;
        if (!tab.contradiction) {
          char buf[200];
          std::snprintf(buf, sizeof buf, "%s h=%.6g %s theta=%.15g: mu=%d bp=%d ip=%d", name,
                        tab.h, row.region.c_str(), pr.theta, pr.mu, pr.boundary_points,
                        pr.interior_points);
          tab.contradiction = Contradiction{name, buf};
        }
      }
    }
  }
}

}  // namespace

TransitionTable transition_table_02(double h, const CountOptions& opts) {
  if (!(h > 0.0 && h <= 0.05)) throw std::domain_error("transition_table_02: h outside (0, 0.05]");
  const Theta02 c = critical_theta_02(h);
  TransitionTable tab;
  tab.h = h;
  auto row = [&](const char* region, double lo, double hi, int mu, std::vector<double> at) {
    TableRow r;
    r.region = region;
    r.lo = lo;
    r.hi = hi;
    r.expected_mu = mu;
    for (double th : at) r.probes.push_back(probe(0, 2, th, h, opts));
    tab.rows.push_back(std::move(r));
  };
  const double t1 = c.theta1, t2 = c.theta2, t3 = c.theta3;
  row("[0,theta1]", 0.0, t1, 3, {0.0, 0.5 * t1, t1});
  row("(theta1,theta2)", t1, t2, 2, {0.5 * (t1 + t2)});
  row("[theta2,theta3)", t2, t3, 3, {t2, 0.5 * (t2 + t3)});
  row("{theta3}", t3, t3, 4, {t3});
  row("(theta3,pi)", t3, pi, 3, {0.5 * (t3 + pi)});
  finish(tab, "transition-02");
  return tab;
}

TransitionTable transition_table_03(double h, const CountOptions& opts) {
  if (!(h > 0.0 && h <= 0.05)) throw std::domain_error("transition_table_03: h outside (0, 0.05]");
  const Theta03 c = critical_theta_03(h);
  TransitionTable tab;
  tab.h = h;
  auto row = [&](const char* region, double lo, double hi, int bp, int ip, int mu,
                 std::vector<double> at) {
    TableRow r;
    r.region = region;
    r.lo = lo;
    r.hi = hi;
    r.expected_mu = mu;
    r.expected_boundary = bp;
    r.expected_interior = ip;
    for (double th : at) r.probes.push_back(probe(0, 3, th, h, opts));
    tab.rows.push_back(std::move(r));
  };
  const double t = c.theta, q = 0.25 * pi;
  row("[0,theta)", 0.0, t, 6, 0, 4, {0.0, 0.5 * t});
  row("{theta}", t, t, 4, 0, 4, {t});
  row("(theta,pi/4)", t, q, 2, 0, 2, {0.5 * (t + q)});
  row("{pi/4}", q, q, 2, 2, 4, {q});
  finish(tab, "transition-03");
  return tab;
}

}  // namespace robin
