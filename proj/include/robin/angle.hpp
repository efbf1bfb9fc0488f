#pragma once

#include <string_view>

namespace robin {

// Maps any angle into [0, pi).
double normalize_theta(double theta);

// Accepts "0.25", "pi", "3pi/4", "pi/4", "-pi/8", "atan:7/9" (= atan2(7, 9)),
// "atan:-1/3". Throws std::invalid_argument on anything else.
double parse_theta(std::string_view text);

}  // namespace robin
