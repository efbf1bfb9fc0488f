#pragma once

#include <array>
#include <cmath>

#include "robin/robin1d.hpp"

namespace robin {

// Phi(x, y) = cos(theta) u_p(x) u_q(y) + sin(theta) u_q(x) u_p(y) on
// S = (-pi/2, pi/2)^2. For p == q the family is the single product
// u_p(x) u_p(y) and theta is ignored.
class ThetaFamily {
 public:
  ThetaFamily(int p, int q, double theta, double h);

  int p() const { return p_; }
  int q() const { return q_; }
  double theta() const { return theta_; }
  double h() const { return h_; }
  const AlphaBranch& branch_p() const { return bp_; }
  const AlphaBranch& branch_q() const { return bq_; }
  bool is_product() const { return p_ == q_; }

  // Coefficients of u_p(x)u_q(y) and u_q(x)u_p(y).
  double c() const { return c_; }
  double s() const { return s_; }

  double eigenvalue() const { return bp_.eigenvalue() + bq_.eigenvalue(); }
  // |c| + |s|, an upper bound for sup |Phi|.
  double scale() const { return std::abs(c_) + std::abs(s_); }

  double value(double x, double y) const;
  std::array<double, 2> gradient(double x, double y) const;
  std::array<double, 3> hessian(double x, double y) const;  // xx, xy, yy

 private:
  int p_, q_;
  double theta_, h_;
  AlphaBranch bp_, bq_;
  double c_, s_;
};

inline double eval_phi(const ThetaFamily& f, double x, double y) { return f.value(x, y); }

}  // namespace robin
