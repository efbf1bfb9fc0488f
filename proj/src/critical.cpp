#include "robin/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robin/angle.hpp"
#include "robin/roots.hpp"

namespace robin {

const char* kind_name(CriticalKind k) {
  switch (k) {
    case CriticalKind::transversal_pair_merge: return "transversal-pair-merge";
    case CriticalKind::corner: return "corner";
    case CriticalKind::undecided: return "undecided";
  }
  return "?";
}

namespace {

constexpr double half_pi = 0.5 * pi;

// Phi restricted to a side is cos(theta) A(t) + sin(theta) B(t) with
// A = ka * ua(t), B = kb * ub(t).
struct SidePair {
  AlphaBranch ua, ub;
  double ka = 0.0, kb = 0.0;

  double A(double t) const { return ka * eval_u(ua, t); }
  double B(double t) const { return kb * eval_u(ub, t); }
  double dA(double t) const { return ka * eval_u_derivative(ua, t); }
  double dB(double t) const { return kb * eval_u_derivative(ub, t); }
  double ddA(double t) const { return ka * eval_u_second(ua, t); }
  double ddB(double t) const { return kb * eval_u_second(ub, t); }
  double W(double t) const { return A(t) * dB(t) - dA(t) * B(t); }
  double dW(double t) const { return A(t) * ddB(t) - ddA(t) * B(t); }
};

SidePair side_pair(const AlphaBranch& bp, const AlphaBranch& bq, Side side) {
  const double edge = (side == Side::left || side == Side::bottom) ? -half_pi : half_pi;
  if (side == Side::left || side == Side::right)
    return {bq, bp, eval_u(bp, edge), eval_u(bq, edge)};
  return {bp, bq, eval_u(bq, edge), eval_u(bp, edge)};
}

BoundaryCriticalPoint make_point(const ThetaFamily& proto, const SidePair& sp, Side side,
                                 double t, CriticalKind kind) {
  BoundaryCriticalPoint c;
  c.p = proto.p();
  c.q = proto.q();
  c.h = proto.h();
  c.side = side;
  c.position = t;
  c.kind = kind;
  const double a = sp.A(t), b = sp.B(t);
  const double amp = std::fabs(sp.ka) + std::fabs(sp.kb);
  if (std::fabs(a) < 1e-12 * amp && std::fabs(b) < 1e-12 * amp) {
    // Phi vanishes here for every theta; pick the one killing the slope.
    c.theta_star = normalize_theta(std::atan2(-sp.dA(t), sp.dB(t)));
    c.kind = CriticalKind::undecided;
  } else {
    c.theta_star = normalize_theta(std::atan2(-a, b));
  }
  ThetaFamily f(proto.p(), proto.q(), c.theta_star, proto.h());
  c.residual_value = std::fabs(side_value(f, side, t)) / f.scale();
  c.residual_tangential = std::fabs(side_derivative(f, side, t)) / f.scale();
  return c;
}

}  // namespace

std::vector<BoundaryCriticalPoint> boundary_critical_points(int p, int q, double h, Side side) {
  if (p == q) throw std::invalid_argument("boundary_critical_points: needs p != q");
  if (p < 0 || q < 0) throw std::invalid_argument("boundary_critical_points: negative index");
  const ThetaFamily proto(p, q, 0.0, h);
  const SidePair sp = side_pair(proto.branch_p(), proto.branch_q(), side);

  const int parts = 2 * std::max(p, q) * 32;
  const double lo = -half_pi + 1e-6, hi = half_pi - 1e-6;
  std::vector<double> ts(parts + 1), ws(parts + 1);
  double wscale = 0.0;
  for (int k = 0; k <= parts; ++k) {
    ts[k] = lo + (hi - lo) * k / parts;
    ws[k] = sp.W(ts[k]);
    wscale = std::max(wscale, std::fabs(ws[k]));
  }
  const double zero = 1e-14 * wscale;
  auto W = [&](double t) { return sp.W(t); };
  auto dW = [&](double t) { return sp.dW(t); };

  std::vector<std::pair<double, CriticalKind>> roots;
  for (int k = 0; k < parts; ++k) {
    const double a = ws[k], b = ws[k + 1];
    if (std::fabs(a) <= zero) {
      // exact node root: double if the neighbours agree in sign
      const double l = k > 0 ? ws[k - 1] : -b;
      roots.push_back({ts[k], (l < 0) == (b < 0) && k > 0 ? CriticalKind::undecided
                                                         : CriticalKind::transversal_pair_merge});
      continue;
    }
    if (std::fabs(b) <= zero) continue;
    if ((a < 0) != (b < 0)) {
      RootOptions opts;
      opts.bisect_width = 1e-10;
      opts.tol = 1e-15;
      roots.push_back({bisect_newton(W, dW, ts[k], ts[k + 1], opts).root,
                       CriticalKind::transversal_pair_merge});
      continue;
    }
    // a dip of |W| inside the interval that misses zero only by rounding
    const double s = a < 0 ? -1.0 : 1.0;
    const double ds0 = s * sp.dW(ts[k]), ds1 = s * sp.dW(ts[k + 1]);
    if (ds0 < 0 && ds1 > 0) {
      const double t = golden_minimize([&](double u) { return s * sp.W(u); }, ts[k], ts[k + 1]);
      if (std::fabs(sp.W(t)) <= 1e-10 * wscale) roots.push_back({t, CriticalKind::undecided});
    }
  }
  if (std::fabs(ws[parts]) <= zero) roots.push_back({ts[parts], CriticalKind::transversal_pair_merge});

  std::vector<BoundaryCriticalPoint> out;
  for (auto [t, kind] : roots) out.push_back(make_point(proto, sp, side, t, kind));
  return out;
}

std::vector<BoundaryCriticalPoint> all_boundary_critical_points(int p, int q, double h) {
  std::vector<BoundaryCriticalPoint> out;
  for (Side s : all_sides) {
    auto v = boundary_critical_points(p, q, h, s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<CornerTheta> corner_thetas(int p, int q, double h) {
  std::vector<CornerTheta> out;
  if (p == q) return out;  // a product never vanishes at a corner
  const AlphaBranch bp = solve_alpha(p, h), bq = solve_alpha(q, h);
  for (double x : {-half_pi, half_pi})
    for (double y : {-half_pi, half_pi}) {
      const double a = eval_u(bp, x) * eval_u(bq, y);
      const double b = eval_u(bq, x) * eval_u(bp, y);
      CornerTheta c{x, y, normalize_theta(std::atan2(-a, b)), 0.0};
      ThetaFamily f(p, q, c.theta, h);
      c.residual = std::fabs(f.value(x, y)) / f.scale();
      out.push_back(c);
    }
  return out;
}

std::vector<double> corner_zero_thetas(int p, int q, double h) {
  std::vector<double> t;
  for (const auto& c : corner_thetas(p, q, h)) t.push_back(c.theta);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end(), [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
          t.end());
  return t;
}

std::vector<BoundaryCriticalPoint> corner_critical_points(int p, int q, double h) {
  std::vector<BoundaryCriticalPoint> out;
  for (const auto& c : corner_thetas(p, q, h)) {
    BoundaryCriticalPoint b;
    b.p = p;
    b.q = q;
    b.h = h;
    // reported on the vertical side through the corner, at its end
    b.side = c.x < 0 ? Side::left : Side::right;
    b.position = c.y;
    b.theta_star = c.theta;
    b.kind = CriticalKind::corner;
    b.residual_value = c.residual;
    b.residual_tangential = 0.0;
    out.push_back(b);
  }
  return out;
}

Theta02 critical_theta_02(double h) {
  if (!(h >= 0.0 && h <= 0.2)) throw std::domain_error("critical_theta_02: h outside [0, 0.2]");
  const double a0 = solve_alpha(0, h).alpha, a2 = solve_alpha(2, h).alpha;
  Theta02 r;
  r.h = h;
  r.theta1 = std::atan(-std::cos(0.5 * a0) / std::cos(0.5 * a2));
  r.theta2 = half_pi - r.theta1;
  r.theta3 = 0.75 * pi;
  return r;
}

Theta03 critical_theta_03(double h) {
  if (!(h >= 0.0 && h <= 0.2)) throw std::domain_error("critical_theta_03: h outside [0, 0.2]");
  const AlphaBranch b0 = solve_alpha(0, h), b3 = solve_alpha(3, h);
  const double a0 = b0.alpha, a3 = b3.alpha;
  // Wronskian condition on x = pi/2, divided by the corner constants:
  // a0 sin(a3 y/pi) sin(a0 y/pi) + a3 cos(a3 y/pi) cos(a0 y/pi) = 0
  auto g = [&](double y) {
    return a0 * std::sin(a3 * y / pi) * std::sin(a0 * y / pi) +
           a3 * std::cos(a3 * y / pi) * std::cos(a0 * y / pi);
  };
  const double lo = pi / 6 - 0.05, hi = pi / 6 + 0.05;
  const double yc = bisect(g, lo, hi, 1e-15).root;
  Theta03 r;
  r.h = h;
  r.y_c = yc;
  const double A = std::cos(0.5 * a0) * std::sin(a3 * yc / pi);
  const double B = std::sin(0.5 * a3) * std::cos(a0 * yc / pi);
  r.theta = normalize_theta(std::atan2(-A, B));
  return r;
}

double special_theta_79() { return std::atan(7.0 / 9.0); }

bool is_zero_critical(const ThetaFamily& f, double x, double y, double value_tol,
                      double grad_tol) {
  const double s = f.scale();
  auto g = f.gradient(x, y);
  return std::fabs(f.value(x, y)) <= value_tol * s && std::fabs(g[0]) <= grad_tol * s &&
         std::fabs(g[1]) <= grad_tol * s;
}

std::vector<InteriorCriticalPoint> interior_zero_critical_points(const ThetaFamily& f,
                                                                 int seed_level) {
  const int n = 1 << seed_level;
  const double s = f.scale();
  const double k2 = f.eigenvalue() + 1.0;
  std::vector<InteriorCriticalPoint> found;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = -half_pi + (i + 0.5) * pi / n;
      double y = -half_pi + (j + 0.5) * pi / n;
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        auto g = f.gradient(x, y);
        auto H = f.hessian(x, y);
        if (std::hypot(g[0], g[1]) <= 1e-13 * s * std::sqrt(k2)) {
          ok = true;
          break;
        }
        const double det = H[0] * H[2] - H[1] * H[1];
        if (det == 0.0) break;
        const double dx = (H[2] * g[0] - H[1] * g[1]) / det;
        const double dy = (H[0] * g[1] - H[1] * g[0]) / det;
        x -= dx;
        y -= dy;
        if (!(std::fabs(x) < half_pi && std::fabs(y) < half_pi)) break;
      }
      if (!ok) continue;
      if (!(std::fabs(x) < half_pi - 1e-9 && std::fabs(y) < half_pi - 1e-9)) continue;
      const double v = f.value(x, y);
      if (std::fabs(v) > 1e-9 * s) continue;
      bool dup = false;
      for (const auto& c : found)
        if (std::hypot(c.x - x, c.y - y) < 1e-6) dup = true;
      if (!dup) found.push_back({x, y, v});
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return found;
}

}  // namespace robin
