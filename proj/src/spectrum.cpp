#include "robin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "robin/roots.hpp"

namespace robin {

bool EigenLevel::contains(IndexPair p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

int SpectrumTable::label_count() const {
  return levels.empty() ? 0 : levels.back().label_hi;
}

std::size_t SpectrumTable::level_index_of_label(int n) const {
  if (n < 1 || n > label_count())
    throw std::out_of_range("label " + std::to_string(n) + " outside table");
  auto it = std::lower_bound(levels.begin(), levels.end(), n,
                             [](const EigenLevel& l, int k) { return l.label_hi < k; });
  return static_cast<std::size_t>(it - levels.begin());
}

const EigenLevel& SpectrumTable::level_of_label(int n) const {
  return levels[level_index_of_label(n)];
}

std::optional<std::size_t> SpectrumTable::level_index_of_pair(IndexPair p) const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (levels[k].contains(p)) return k;
  return std::nullopt;
}

double SpectrumTable::pair_value(IndexPair p) const {
  if (p.i < 0 || p.j < 0 || p.i > index_cap || p.j > index_cap)
    throw std::out_of_range("pair outside index cap");
  if (h == 0.0) return double(p.i) * p.i + double(p.j) * p.j;
  const double a = alphas[p.i].alpha, b = alphas[p.j].alpha;
  return (a * a + b * b) / (pi * pi);
}

double pair_eigenvalue(int i, int j, double h) {
  if (h == 0.0) return double(i) * i + double(j) * j;
  const double a = solve_alpha(i, h).alpha, b = solve_alpha(j, h).alpha;
  return (a * a + b * b) / (pi * pi);
}

SpectrumTable build_spectrum(double h, double lambda_max, double cluster_tol,
                             std::optional<int> index_cap) {
  if (!(lambda_max >= 0.0) || !std::isfinite(lambda_max))
    throw std::invalid_argument("build_spectrum: lambda_max must be >= 0");
  if (!(cluster_tol > 0.0))
    throw std::invalid_argument("build_spectrum: cluster_tol must be > 0");

  SpectrumTable t;
  t.h = h;
  t.lambda_max = lambda_max;
  t.cluster_tol = cluster_tol;
  t.index_cap = index_cap.value_or(int(std::ceil(std::sqrt(lambda_max))) + 2);
  if (t.index_cap < 0) throw std::invalid_argument("build_spectrum: negative index cap");
  // alpha_i >= i pi, so every index above the cap has lambda >= (cap+1)^2.
  const double next = double(t.index_cap + 1) * (t.index_cap + 1);
  if (!(next > lambda_max)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "index cap %d cannot cover lambda_max %.17g",
                  t.index_cap, lambda_max);
    throw CompletenessFailure(buf);
  }

  t.alphas.reserve(t.index_cap + 1);
  for (int i = 0; i <= t.index_cap; ++i) t.alphas.push_back(solve_alpha(i, h));

  struct Entry {
    double value;
    IndexPair pair;
  };
  std::vector<Entry> entries;
  for (int i = 0; i <= t.index_cap; ++i)
    for (int j = 0; j <= t.index_cap; ++j) {
      double v = t.pair_value({i, j});
      if (v <= lambda_max) entries.push_back({v, {i, j}});
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.pair < b.pair;
  });

  int label = 1;
  for (std::size_t k = 0; k < entries.size();) {
    EigenLevel lvl;
    lvl.h = h;
    lvl.value = entries[k].value;
    std::size_t m = k;
    while (m < entries.size() && entries[m].value - lvl.value < cluster_tol)
      lvl.pairs.push_back(entries[m++].pair);
    std::sort(lvl.pairs.begin(), lvl.pairs.end());
    lvl.label_lo = label;
    lvl.label_hi = label + lvl.multiplicity() - 1;
    label = lvl.label_hi + 1;
    t.levels.push_back(std::move(lvl));
    k = m;
  }
  return t;
}

int counting_function(const SpectrumTable& table, double lambda) {
  if (lambda > table.lambda_max)
    throw std::domain_error("counting_function: lambda beyond table cutoff");
  int n = 0;
  for (const auto& l : table.levels) {
    if (!(l.value < lambda)) break;
    n += l.multiplicity();
  }
  return n;
}

WeylCheck weyl_sandwich_check(const SpectrumTable& table, double lambda) {
  if (table.h != 0.0)
    throw std::invalid_argument("weyl_sandwich_check: only valid at h = 0");
  WeylCheck w;
  w.lambda = lambda;
  w.count = counting_function(table, lambda);
  w.lower = 0.25 * pi * lambda;
  w.upper = w.lower + 2.0 * std::floor(std::sqrt(lambda)) + 1.0;
  w.lower_margin = w.count - w.lower;
  w.upper_margin = w.upper - w.count;
  w.pass = w.upper >= w.count && w.count > w.lower;
  return w;
}

JnValue jn_value(const SpectrumTable& table, int n) {
  const EigenLevel& l = table.level_of_label(n);
  int j = 0;
  for (const auto& p : l.pairs) j = std::max(j, p.j);
  return {n, j};
}

namespace {

IndexPair normalised(IndexPair p) {
  if (p.i > p.j) std::swap(p.i, p.j);
  return p;
}

}  // namespace

CrossingResult find_crossing(IndexPair a, IndexPair b, double h_max, int samples) {
  a = normalised(a);
  b = normalised(b);
  if (a == b) throw std::invalid_argument("find_crossing: pairs coincide after normalisation");
  if (a.i < 0 || b.i < 0) throw std::invalid_argument("find_crossing: negative index");
  if (!(h_max > 0.0) || samples < 2)
    throw std::invalid_argument("find_crossing: need h_max > 0 and samples >= 2");

  CrossingResult r;
  r.a = a;
  r.b = b;
  auto diff = [&](double h) { return pair_eigenvalue(a.i, a.j, h) - pair_eigenvalue(b.i, b.j, h); };

  std::vector<double> hs(samples + 1), ds(samples + 1);
  for (int k = 0; k <= samples; ++k) {
    hs[k] = h_max * k / samples;
    ds[k] = diff(hs[k]);
  }

  // Sign changes between consecutive nonzero samples; an exact zero sample
  // is itself a crossing point.
  std::vector<double> roots;
  int last = -1;
  for (int k = 0; k <= samples; ++k) {
    if (ds[k] == 0.0) {
      roots.push_back(hs[k]);
      last = -1;
      continue;
    }
    if (last >= 0 && (ds[last] < 0.0) != (ds[k] < 0.0))
      roots.push_back(bisect(diff, hs[last], hs[k], 1e-13).root);
    last = k;
  }
  // a zero sample followed by a sign flip is one crossing, not two
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::fabs(x - y) < 1e-9; }),
              roots.end());
  r.sign_changes = static_cast<int>(roots.size());
  if (!roots.empty()) r.h_star = roots.front();
  if (roots.size() > 1) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu crossings of (%d,%d) and (%d,%d) on [0, %.6g]",
                  roots.size(), a.i, a.j, b.i, b.j, h_max);
    r.contradiction = Contradiction{"crossing-uniqueness", buf};
  }

  // Nested pairs: the inner pair must stay above the outer one past h*.
  const IndexPair* outer = nullptr;
  const IndexPair* inner = nullptr;
  if (a.i < b.i && b.j < a.j) { outer = &a; inner = &b; }
  if (b.i < a.i && a.j < b.j) { outer = &b; inner = &a; }
  if (outer && r.h_star) {
    r.ordering_checked = true;
    for (int k = 0; k <= samples; ++k) {
      if (!(hs[k] > *r.h_star)) continue;
      double d = (outer == &a) ? -ds[k] : ds[k];  // inner - outer
      if (!(d > 0.0)) {
        r.ordering_holds = false;
        if (!r.contradiction) {
          char buf[200];
          std::snprintf(buf, sizeof buf, "inner (%d,%d) not above outer (%d,%d) at h=%.6g",
                        inner->i, inner->j, outer->i, outer->j, hs[k]);
          r.contradiction = Contradiction{"crossing-ordering", buf};
        }
        break;
      }
    }
  }
  return r;
}

DecayReport multiplicity_decay_check(const EigenLevel& level, double h_probe,
                                     double cluster_tol) {
  if (level.h != 0.0) throw std::invalid_argument("decay check: level must be from h = 0");
  if (!(h_probe > 0.0 && h_probe <= 0.05))
    throw std::invalid_argument("decay check: h_probe must lie in (0, 0.05]");

  DecayReport rep;
  rep.h_probe = h_probe;
  double top = 0.0;
  for (const auto& p : level.pairs) top = std::max(top, pair_eigenvalue(p.i, p.j, h_probe));
  SpectrumTable t = build_spectrum(h_probe, top + 1.0, cluster_tol);

  std::vector<std::size_t> seen;
  for (const auto& p : level.pairs) {
    auto idx = t.level_index_of_pair(p);
    if (!idx) throw CompletenessFailure("decay check: pair missing at h_probe");
    if (std::find(seen.begin(), seen.end(), *idx) == seen.end()) seen.push_back(*idx);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t idx : seen) {
    const EigenLevel& l = t.levels[idx];
    rep.sublevels.push_back({l.value, l.pairs});
    for (const auto& p : l.pairs) {
      if (!level.contains(p)) {
        rep.refines = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, "(%d,%d) joins the cluster at h=%.6g", p.i, p.j, h_probe);
        rep.contradiction = Contradiction{"multiplicity-decay", buf};
      }
    }
  }
  return rep;
}

}  // namespace robin
