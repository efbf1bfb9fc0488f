#include "robin/robin1d.hpp"

#include <cmath>
#include <stdexcept>

#include "robin/roots.hpp"

namespace robin {

double secular(Parity parity, double h, double a) {
  const double hp = h * pi;
  if (parity == Parity::even) return a * std::sin(0.5 * a) - hp * std::cos(0.5 * a);
  return a * std::cos(0.5 * a) + hp * std::sin(0.5 * a);
}

namespace {

double secular_prime(Parity parity, double h, double a) {
  const double hp = h * pi;
  const double s = std::sin(0.5 * a), c = std::cos(0.5 * a);
  if (parity == Parity::even) return s + 0.5 * a * c + 0.5 * hp * s;
  return c - 0.5 * a * s + 0.5 * hp * c;
}

}  // namespace

AlphaBranch solve_alpha(int n, double h, double tol) {
  if (n < 0) throw std::invalid_argument("solve_alpha: n must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_alpha: tol must be > 0");
  if (!(h >= 0.0) || std::signbit(h))
    throw std::domain_error("solve_alpha: h must be >= 0 (use solve_beta)");
  if (!std::isfinite(h)) throw std::domain_error("solve_alpha: h must be finite");

  AlphaBranch b;
  b.n = n;
  b.h = h;
  b.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
  if (h == 0.0) {
    b.alpha = n * pi;
    return b;
  }

  const Parity par = b.parity;
  RootOptions opts;
  opts.tol = tol;
  RootResult r = bisect_newton([&](double a) { return secular(par, h, a); },
                               [&](double a) { return secular_prime(par, h, a); },
                               n * pi, (n + 1) * pi, opts);
  b.alpha = r.root;
  b.residual = std::fabs(secular(par, h, b.alpha));
  return b;
}

BetaGroundState solve_beta(double h, double tol) {
  if (!(h < 0.0)) throw std::domain_error("solve_beta: h must be < 0");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_beta: tol must be > 0");
  const double target = -h * pi;
  auto f = [&](double b) { return b * std::tanh(0.5 * b) - target; };
  auto df = [&](double b) {
    double t = std::tanh(0.5 * b);
    return t + 0.5 * b * (1.0 - t * t);
  };
  double hi = 1.0;
  while (f(hi) <= 0.0) hi *= 2.0;
  RootOptions opts;
  opts.tol = tol;
  RootResult r = bisect_newton(f, df, 0.0, hi, opts);

  BetaGroundState g;
  g.h = h;
  g.beta = r.root;
  g.energy = -g.beta * g.beta;
  g.eigenvalue = g.energy / (pi * pi);
  g.residual = std::fabs(f(g.beta));
  return g;
}

double eval_u(const AlphaBranch& b, double x) {
  const double k = b.alpha / pi;
  return b.parity == Parity::even ? std::cos(k * x) : std::sin(k * x);
}

double eval_u_derivative(const AlphaBranch& b, double x) {
  const double k = b.alpha / pi;
  return b.parity == Parity::even ? -k * std::sin(k * x) : k * std::cos(k * x);
}

double eval_u_second(const AlphaBranch& b, double x) {
  const double k = b.alpha / pi;
  return -k * k * eval_u(b, x);
}

}  // namespace robin
