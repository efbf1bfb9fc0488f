#include "robin/roots.hpp"

#include <cmath>
#include <cstdio>

namespace robin {

namespace {

bool opposite(double a, double b) { return (a < 0.0) != (b < 0.0); }

std::string bracket_message(const char* what, double lo, double hi) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s on [%.17g, %.17g]", what, lo, hi);
  return buf;
}

}  // namespace

RootResult bisect(const ScalarFn& f, double lo, double hi, double tol,
                  int max_iterations) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0};
  if (!opposite(flo, fhi) || !std::isfinite(flo) || !std::isfinite(fhi))
    throw SolverFailure(bracket_message("no sign change", lo, hi), lo, hi, 0);

  int it = 0;
  while (hi - lo > tol) {
    if (++it > max_iterations)
      throw SolverFailure(bracket_message("bisection did not converge", lo, hi),
                          lo, hi, it);
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket is at machine resolution
    double fm = f(mid);
    if (fm == 0.0) return {mid, mid, mid, it};
    if (opposite(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return {0.5 * (lo + hi), lo, hi, it};
}

RootResult bisect_newton(const ScalarFn& f, const ScalarFn& df, double lo,
                         double hi, const RootOptions& opts) {
  RootResult coarse = bisect(f, lo, hi, opts.bisect_width, opts.max_iterations);
  if (coarse.lo == coarse.hi) return coarse;

  lo = coarse.lo;
  hi = coarse.hi;
  double flo = f(lo);
  double x = coarse.root;
  int it = coarse.iterations;
  while (it < opts.max_iterations) {
    ++it;
    double fx = f(x);
    if (fx == 0.0) return {x, lo, hi, it};
    if (opposite(flo, fx)) {
      hi = x;
    } else {
      lo = x;
      flo = fx;
    }
    double d = df(x);
    double next = (d != 0.0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    double step = std::fabs(next - x);
    x = next;
    if (step <= opts.tol || hi - lo <= opts.tol) return {x, lo, hi, it};
  }
  throw SolverFailure(bracket_message("newton polish did not converge", lo, hi),
                      lo, hi, it);
}

double golden_minimize(const ScalarFn& f, double lo, double hi, double tol,
                       int max_iterations) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iterations && b - a > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace robin
