#include "robin/bessel.hpp"

#include <cmath>

#include "robin/roots.hpp"

namespace robin {

double bessel_j0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= -q / (double(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double first_bessel_zero() {
  static const double j = bisect(bessel_j0, 2.0, 3.0, 1e-15).root;
  return j;
}

}  // namespace robin
