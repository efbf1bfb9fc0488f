#pragma once

#include <array>
#include <optional>
#include <vector>

#include "robin/nodal.hpp"
#include "robin/theta_family.hpp"

namespace robin {

enum class CriticalKind { transversal_pair_merge, corner, undecided };
const char* kind_name(CriticalKind k);

// A point of the boundary where, for theta = theta_star, Phi and its
// tangential derivative both vanish. Robin makes the normal derivative
// -h Phi, so it vanishes there as well.
struct BoundaryCriticalPoint {
  int p = 0, q = 0;
  double h = 0.0;
  Side side = Side::left;
  double position = 0.0;  // free coordinate along the side
  double theta_star = 0.0;
  CriticalKind kind = CriticalKind::transversal_pair_merge;
  double residual_value = 0.0;       // |Phi| / scale
  double residual_tangential = 0.0;  // |d_t Phi| / scale
};

// Interior points of one side. Writing Phi = cos(t) A + sin(t) B on the
// side, the candidates are the zeros of the Wronskian A B' - A' B, found on
// 2 max(p,q) 32 subintervals. Throws std::invalid_argument for p == q.
std::vector<BoundaryCriticalPoint> boundary_critical_points(int p, int q, double h, Side side);
std::vector<BoundaryCriticalPoint> all_boundary_critical_points(int p, int q, double h);

// Corner zeros: for each corner the theta in [0, pi) where Phi vanishes there.
struct CornerTheta {
  double x = 0.0, y = 0.0;
  double theta = 0.0;
  double residual = 0.0;  // |Phi(corner)| / scale at theta
};
std::vector<CornerTheta> corner_thetas(int p, int q, double h);
// Distinct corner theta values, ascending.
std::vector<double> corner_zero_thetas(int p, int q, double h);
std::vector<BoundaryCriticalPoint> corner_critical_points(int p, int q, double h);

struct Theta02 {
  double h = 0.0;
  double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;
};
// Requires 0 <= h <= 0.2.
Theta02 critical_theta_02(double h);

struct Theta03 {
  double h = 0.0;
  double y_c = 0.0;    // on the side x = pi/2, upper root
  double theta = 0.0;  // in (0, pi/4] for small h
};
// Requires 0 <= h <= 0.2; SolverFailure if no bracket is found near pi/6.
Theta03 critical_theta_03(double h);

double special_theta_79();

// Zero critical point test: |Phi| <= value_tol scale and |grad Phi| <= grad_tol scale.
bool is_zero_critical(const ThetaFamily& f, double x, double y, double value_tol = 1e-9,
                      double grad_tol = 1e-8);

struct InteriorCriticalPoint {
  double x = 0.0, y = 0.0;
  double value = 0.0;
};

// Interior points with grad Phi = 0 and Phi = 0, from Newton on the gradient
// seeded on a (2^seed_level)^2 grid.
std::vector<InteriorCriticalPoint> interior_zero_critical_points(const ThetaFamily& f,
                                                                 int seed_level = 6);

}  // namespace robin
