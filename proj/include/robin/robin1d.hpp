#pragma once

#include <numbers>

namespace robin {

inline constexpr double pi = std::numbers::pi;

enum class Parity { even, odd };

// n-th Robin branch of -u'' on (-pi/2, pi/2) with u' + h u = 0 on the
// outward normal. The eigenvalue is (alpha/pi)^2.
struct AlphaBranch {
  int n = 0;
  double h = 0.0;
  double alpha = 0.0;
  Parity parity = Parity::even;
  double residual = 0.0;  // |defect| of the pole-free secular function

  double eigenvalue() const { return (alpha / pi) * (alpha / pi); }
};

// Negative-h ground state, u = cosh(beta x / pi).
struct BetaGroundState {
  double h = 0.0;
  double beta = 0.0;
  double energy = 0.0;      // -beta^2
  double eigenvalue = 0.0;  // -(beta/pi)^2, same scaling as AlphaBranch
  double residual = 0.0;
};

// Unique root of the n-th branch in [n pi, (n+1) pi). Throws
// std::invalid_argument for n < 0 or tol <= 0, std::domain_error for h < 0,
// SolverFailure if the bracket collapses without converging.
AlphaBranch solve_alpha(int n, double h, double tol = 1e-13);

// beta tanh(beta/2) = |h| pi for h < 0.
BetaGroundState solve_beta(double h, double tol = 1e-13);

// Secular function in pole-free form: alpha sin(alpha/2) - h pi cos(alpha/2)
// for even n, alpha cos(alpha/2) + h pi sin(alpha/2) for odd n.
double secular(Parity parity, double h, double alpha);

double eval_u(const AlphaBranch& b, double x);
double eval_u_derivative(const AlphaBranch& b, double x);
double eval_u_second(const AlphaBranch& b, double x);

}  // namespace robin
