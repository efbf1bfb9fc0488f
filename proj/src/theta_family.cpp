#include "robin/theta_family.hpp"

#include <cmath>
#include <stdexcept>

namespace robin {

ThetaFamily::ThetaFamily(int p, int q, double theta, double h)
    : p_(p), q_(q), theta_(theta), h_(h), bp_(solve_alpha(p, h)), bq_(solve_alpha(q, h)) {
  if (!std::isfinite(theta)) throw std::invalid_argument("ThetaFamily: theta must be finite");
  if (p == q) {
    c_ = 1.0;
    s_ = 0.0;
  } else {
    c_ = std::cos(theta);
    s_ = std::sin(theta);
  }
}

double ThetaFamily::value(double x, double y) const {
  return c_ * eval_u(bp_, x) * eval_u(bq_, y) + s_ * eval_u(bq_, x) * eval_u(bp_, y);
}

std::array<double, 2> ThetaFamily::gradient(double x, double y) const {
  const double upx = eval_u(bp_, x), uqx = eval_u(bq_, x);
  const double upy = eval_u(bp_, y), uqy = eval_u(bq_, y);
  const double dpx = eval_u_derivative(bp_, x), dqx = eval_u_derivative(bq_, x);
  const double dpy = eval_u_derivative(bp_, y), dqy = eval_u_derivative(bq_, y);
  return {c_ * dpx * uqy + s_ * dqx * upy, c_ * upx * dqy + s_ * uqx * dpy};
}

std::array<double, 3> ThetaFamily::hessian(double x, double y) const {
  const double upx = eval_u(bp_, x), uqx = eval_u(bq_, x);
  const double upy = eval_u(bp_, y), uqy = eval_u(bq_, y);
  const double dpx = eval_u_derivative(bp_, x), dqx = eval_u_derivative(bq_, x);
  const double dpy = eval_u_derivative(bp_, y), dqy = eval_u_derivative(bq_, y);
  const double spx = eval_u_second(bp_, x), sqx = eval_u_second(bq_, x);
  const double spy = eval_u_second(bp_, y), sqy = eval_u_second(bq_, y);
  return {c_ * spx * uqy + s_ * sqx * upy, c_ * dpx * dqy + s_ * dqx * dpy,
          c_ * upx * sqy + s_ * uqx * spy};
}

}  // namespace robin
