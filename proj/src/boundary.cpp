#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "robin/angle.hpp"
#include "robin/nodal.hpp"
#include "robin/roots.hpp"

namespace robin {

namespace {

constexpr double half_pi = 0.5 * pi;

struct SidePoint {
  double x, y;
};

SidePoint side_point(Side side, double t) {
  switch (side) {
    case Side::left: return {-half_pi, t};
    case Side::right: return {half_pi, t};
    case Side::bottom: return {t, -half_pi};
    case Side::top: return {t, half_pi};
  }
  return {0.0, 0.0};
}

}  // namespace

double side_value(const ThetaFamily& f, Side side, double t) {
  auto [x, y] = side_point(side, t);
  return f.value(x, y);
}

double side_derivative(const ThetaFamily& f, Side side, double t) {
  auto [x, y] = side_point(side, t);
  auto g = f.gradient(x, y);
  return (side == Side::left || side == Side::right) ? g[1] : g[0];
}

SideZeros boundary_zeros(const ThetaFamily& f, Side side, int samples) {
  if (samples < 16) throw std::invalid_argument("boundary_zeros: need at least 16 samples");
  SideZeros z;
  z.side = side;
  const double scale = f.scale();
  const double zero_eps = 1e-12 * scale;
  const double dip_tol = 1e-8 * scale;
  const double dt = pi / samples;
  auto g = [&](double t) { return side_value(f, side, t); };
  auto sgn = [&](double v) { return v > zero_eps ? 1 : (v < -zero_eps ? -1 : 0); };

  std::vector<double> ts(samples - 1), gs(samples - 1);
  std::vector<int> ss(samples - 1);
  for (int k = 1; k < samples; ++k) {
    ts[k - 1] = -half_pi + k * dt;
    gs[k - 1] = g(ts[k - 1]);
    ss[k - 1] = sgn(gs[k - 1]);
  }
  const int n = samples - 1;

  int last = -1;
  int run_start = -1;  // first zero sample after `last`
  for (int k = 0; k < n; ++k) {
    if (ss[k] == 0) {
      if (run_start < 0) run_start = k;
      continue;
    }
    if (run_start >= 0) {
      const double mid = 0.5 * (ts[run_start] + ts[k - 1]);
      if (last >= 0 && ss[last] == ss[k]) {
        ++z.tangencies;
        z.tangency_points.push_back(mid);
      } else {
        ++z.sign_changes;
        z.zeros.push_back(mid);
      }
    } else if (last >= 0 && ss[last] != ss[k]) {
      ++z.sign_changes;
      z.zeros.push_back(bisect(g, ts[last], ts[k], 1e-14).root);
    }
    run_start = -1;
    last = k;
  }
  if (run_start >= 0) {  // trailing zeros next to the far corner
    ++z.sign_changes;
    z.zeros.push_back(0.5 * (ts[run_start] + ts[n - 1]));
  }

  // Touching dips: a local minimum of |g| between samples of one sign.
  int last_dip = -2;
  for (int k = 1; k + 1 < n; ++k) {
    if (k == last_dip + 1) continue;
    if (ss[k] == 0 || ss[k - 1] != ss[k] || ss[k + 1] != ss[k]) continue;
    const double a = std::fabs(gs[k]);
    if (a > std::fabs(gs[k - 1]) || a > std::fabs(gs[k + 1])) continue;
    if (a > 1e-3 * scale) continue;
    const double s = ss[k];
    const double t = golden_minimize([&](double u) { return s * g(u); }, ts[k - 1], ts[k + 1]);
    const double v = s * g(t);
    last_dip = k;
    if (v < -zero_eps) {
      // two crossings closer than the sample spacing
      z.sign_changes += 2;
      z.zeros.push_back(bisect(g, ts[k - 1], t, 1e-14).root);
      z.zeros.push_back(bisect(g, t, ts[k + 1], 1e-14).root);
    } else if (v <= dip_tol) {
      ++z.tangencies;
      z.tangency_points.push_back(t);
    }
  }
  return z;
}

int corner_zero_count(const ThetaFamily& f, double rel_tol) {
  int c = 0;
  for (double x : {-half_pi, half_pi})
    for (double y : {-half_pi, half_pi})
      if (std::fabs(f.value(x, y)) <= rel_tol * f.scale()) ++c;
  return c;
}

int boundary_zero_points(const ThetaFamily& f, int samples) {
  int total = corner_zero_count(f);
  for (Side s : all_sides) total += boundary_zeros(f, s, samples).count();
  return total;
}

SymmetryReport theta_symmetry_check(int p, int q, double h, const std::vector<double>& thetas,
                                    const CountOptions& opts) {
  SymmetryReport rep;
  rep.p = p;
  rep.q = q;
  rep.h = h;
  const bool odd = (p + q) % 2 == 1;
  for (double th : thetas) {
    SymmetryEntry e;
    e.theta = normalize_theta(th);
    auto run = [&](double t) {
      NodalCountResult r = count_nodal_domains(ThetaFamily(p, q, normalize_theta(t), h), opts);
      e.certified = e.certified && r.certified;
      return r.mu;
    };
    e.mu = run(e.theta);
    e.mu_reflected = run(half_pi - e.theta);
    e.ok = e.mu == e.mu_reflected;
    if (odd) {
      e.mu_flipped = run(pi - e.theta);
      e.ok = e.ok && *e.mu_flipped == e.mu && e.mu % 2 == 0;
    }
    if (e.certified && !e.ok) {
      rep.pass = false;
      if (!rep.contradiction) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "(%d,%d) h=%.6g theta=%.15g: mu=%d vs %d", p, q, h, e.theta,
                      e.mu, e.mu_reflected);
        rep.contradiction = Contradiction{"theta-symmetry", buf};
      }
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace robin
