#pragma once

namespace robin {

// J_0 from its power series; accurate for |x| <= 8.
double bessel_j0(double x);

// First positive zero of J_0, bisected on [2, 3] once and cached.
double first_bessel_zero();

}  // namespace robin
