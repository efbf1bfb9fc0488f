#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "robin/robin1d.hpp"
#include "robin/roots.hpp"

using namespace robin;

namespace {

// Independent check: scan the tangent form of the secular equation on a fine
// grid, keep sign changes where the function is small on both sides (poles
// flip sign with huge values), then bisect.
double dense_root(double lo, double hi, const std::function<double(double)>& f, int samples = 1000000) {
  double prev_x = lo, prev = f(lo);
  for (int k = 1; k <= samples; ++k) {
    const double x = lo + (hi - lo) * k / samples;
    const double v = f(x);
    if ((prev < 0) != (v < 0) && std::fabs(prev) < 10 && std::fabs(v) < 10) {
      double a = prev_x, b = x, fa = prev;
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if ((fa < 0) != (fm < 0)) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      return 0.5 * (a + b);
    }
    prev_x = x;
    prev = v;
  }
  return NAN;
}

}  // namespace

TEST(SolveAlpha, NeumannIsExact) {
  EXPECT_EQ(solve_alpha(3, 0.0).alpha, 3 * pi);
  EXPECT_EQ(solve_alpha(0, 0.0).alpha, 0.0);
  EXPECT_EQ(solve_alpha(3, 0.0).parity, Parity::odd);
}

TEST(SolveAlpha, SmallHGroundBranch) {
  const double h = 1e-4;
  const double a = solve_alpha(0, h).alpha;
  EXPECT_LT(std::fabs(a / std::sqrt(2 * pi * h) - 1.0), h);
}

TEST(SolveAlpha, SmallHSecondBranch) {
  const double h = 1e-4;
  const double a = solve_alpha(2, h).alpha;
  EXPECT_LT(std::fabs((a - 2 * pi) / h - 1.0), 10 * h);
}

TEST(SolveAlpha, DenseOracleOddBranch) {
  const double h = 0.01;
  const double a = solve_alpha(5, h).alpha;
  const double oracle = dense_root(5 * pi + 1e-9, 6 * pi - 1e-9, [&](double x) {
    return x / (h * pi) + std::tan(0.5 * x);
  });
  EXPECT_NEAR(a, oracle, 1e-12);
}

TEST(SolveAlpha, DenseOracleEvenBranch) {
  const double h = 0.1;
  const double a = solve_alpha(4, h).alpha;
  const double oracle = dense_root(4 * pi, 5 * pi - 1e-9, [&](double x) {
    return x * std::tan(0.5 * x) - h * pi;
  });
  EXPECT_NEAR(a, oracle, 1e-12);
}

TEST(SolveAlpha, BracketResidualMonotone) {
  const double hs[] = {0.0, 1e-3, 1e-2, 0.1};
  for (int n = 0; n <= 12; ++n) {
    double prev = -1.0;
    for (double h : hs) {
      const AlphaBranch b = solve_alpha(n, h);
      EXPECT_GE(b.alpha, n * pi);
      EXPECT_LT(b.alpha, (n + 1) * pi);
      EXPECT_LE(b.residual, 1e-10);
      if (h > 0) EXPECT_GT(b.alpha, prev) << "n=" << n << " h=" << h;
      prev = b.alpha;
    }
  }
}

TEST(SolveAlpha, OdeResidual) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> xs(-0.5 * pi, 0.5 * pi);
  const double step = 1e-4;
  for (int n : {0, 1, 4, 9}) {
    const AlphaBranch b = solve_alpha(n, 0.05);
    const double k2 = (b.alpha / pi) * (b.alpha / pi);
    for (int t = 0; t < 100; ++t) {
      const double x = xs(gen);
      const double fd = (eval_u(b, x + step) - 2 * eval_u(b, x) + eval_u(b, x - step)) / (step * step);
      EXPECT_NEAR(fd + k2 * eval_u(b, x), 0.0, 1e-6 * (1 + k2));
    }
  }
}

TEST(SolveAlpha, RobinBoundaryResidual) {
  for (int n = 0; n <= 12; ++n)
    for (double h : {1e-3, 1e-2, 0.1, 1.0}) {
      const AlphaBranch b = solve_alpha(n, h);
      const double e = 0.5 * pi;
      EXPECT_LE(std::fabs(eval_u_derivative(b, e) + h * eval_u(b, e)), 1e-9);
      EXPECT_LE(std::fabs(-eval_u_derivative(b, -e) + h * eval_u(b, -e)), 1e-9);
    }
}

TEST(SolveAlpha, SlopeAtNeumann) {
  const double h = 1e-6;
  for (int n = 0; n <= 8; ++n) {
    const double a1 = solve_alpha(n, 2 * h).alpha, a0 = solve_alpha(n, 0.0).alpha;
    const double slope = (a1 * a1 - a0 * a0) / (2 * h);
    const double want = n == 0 ? 2 * pi : 4 * pi;
    EXPECT_NEAR(slope / want, 1.0, 0.01) << "n=" << n;
  }
}

TEST(SolveAlpha, Errors) {
  EXPECT_THROW(solve_alpha(-1, 0.1), std::invalid_argument);
  EXPECT_THROW(solve_alpha(1, -0.1), std::domain_error);
  EXPECT_THROW(solve_alpha(1, 0.1, 0.0), std::invalid_argument);
}

TEST(EvalU, Examples) {
  EXPECT_DOUBLE_EQ(eval_u(solve_alpha(1, 0.0), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(eval_u(solve_alpha(2, 0.0), 0.5 * pi), -1.0);
  const AlphaBranch b = solve_alpha(0, 0.1);
  EXPECT_NEAR(eval_u_derivative(b, 0.5 * pi) + 0.1 * eval_u(b, 0.5 * pi), 0.0, 1e-9);
}

TEST(EvalU, DerivativeMatchesFiniteDifference) {
  EXPECT_EQ(eval_u_derivative(solve_alpha(0, 0.0), 0.7), 0.0);
  EXPECT_EQ(eval_u_derivative(solve_alpha(2, 0.0), 0.0), 0.0);
  const AlphaBranch b = solve_alpha(3, 0.05);
  const double x = 0.3, s = 1e-5;
  const double fd = (eval_u(b, x + s) - eval_u(b, x - s)) / (2 * s);
  EXPECT_LT(std::fabs(fd - eval_u_derivative(b, x)) / std::fabs(eval_u_derivative(b, x)), 1e-6);
}

TEST(SolveBeta, Limits) {
  EXPECT_LT(solve_beta(-1e-10).beta, 1e-4);
  const double h = -0.01;
  const BetaGroundState g = solve_beta(h);
  EXPECT_NEAR(g.beta * g.beta / (2 * pi * 0.01), 1.0, 0.01);
  EXPECT_DOUBLE_EQ(g.energy, -g.beta * g.beta);
  EXPECT_GT(g.beta, 0.0);
}

TEST(SolveBeta, DenseOracle) {
  const BetaGroundState g = solve_beta(-1.0);
  const double oracle = dense_root(1e-9, 20.0, [](double b) { return b * std::tanh(0.5 * b) - pi; });
  EXPECT_NEAR(g.beta, oracle, 1e-12);
  EXPECT_LE(g.residual, 1e-12);
}

TEST(SolveBeta, RejectsNonNegative) {
  EXPECT_THROW(solve_beta(0.0), std::domain_error);
  EXPECT_THROW(solve_beta(0.5), std::domain_error);
}

TEST(Roots, FailureCarriesBracket) {
  try {
    bisect([](double x) { return x * x + 1; }, -1.0, 2.0);
    FAIL() << "no throw";
  } catch (const SolverFailure& e) {
    EXPECT_EQ(e.lo(), -1.0);
    EXPECT_EQ(e.hi(), 2.0);
  }
}

TEST(Roots, NewtonPolish) {
  RootResult r = bisect_newton([](double x) { return x * x - 2; }, [](double x) { return 2 * x; }, 0.0, 2.0);
  EXPECT_NEAR(r.root, std::sqrt(2.0), 1e-15);
}
