#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace robin {

// Raised when a bracketed solver cannot produce a root. Carries the last
// bracket so callers can report where it gave up.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double lo, double hi, int iterations)
      : std::runtime_error(what), lo_(lo), hi_(hi), iterations_(iterations) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double lo_;
  double hi_;
  int iterations_;
};

struct RootOptions {
  double bisect_width = 1e-8;  // bisection stops here, Newton takes over
  double tol = 1e-13;          // Newton step size considered converged
  int max_iterations = 400;
};

struct RootResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

using ScalarFn = std::function<double(double)>;

// Bisection down to opts.bisect_width, then safeguarded Newton. f(lo) and
// f(hi) must have opposite signs (or one of them be zero).
RootResult bisect_newton(const ScalarFn& f, const ScalarFn& df, double lo,
                         double hi, const RootOptions& opts = {});

// Plain bisection until the bracket is narrower than tol.
RootResult bisect(const ScalarFn& f, double lo, double hi, double tol = 1e-13,
                  int max_iterations = 400);

// Golden-section minimisation of f on [lo, hi]. Returns the argmin.
double golden_minimize(const ScalarFn& f, double lo, double hi,
                       double tol = 1e-14, int max_iterations = 200);

}  // namespace robin
