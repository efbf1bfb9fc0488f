#include "robin/angle.hpp"

#include <cstdlib>
#include <cmath>
#include <stdexcept>
#include <string>

#include "robin/robin1d.hpp"

namespace robin {

double normalize_theta(double theta) {
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t = 0.0;
  return t;
}

namespace {

double parse_number(std::string_view s, std::string_view whole) {
  // strtod rather than from_chars: libstdc++ 11 lacks the double overload
  std::string buf(s);
  if (buf.empty()) throw std::invalid_argument("bad angle: " + std::string(whole));
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v))
    throw std::invalid_argument("bad angle: " + std::string(whole));
  return v;
}

std::pair<std::string_view, std::string_view> split(std::string_view s, char c) {
  auto k = s.find(c);
  if (k == std::string_view::npos) return {s, {}};
  return {s.substr(0, k), s.substr(k + 1)};
}

}  // namespace

double parse_theta(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty angle");
  if (text.substr(0, 5) == "atan:") {
    auto [a, b] = split(text.substr(5), '/');
    double num = parse_number(a, text);
    double den = b.empty() ? 1.0 : parse_number(b, text);
    return std::atan2(num, den);
  }
  auto k = text.find("pi");
  if (k == std::string_view::npos) return parse_number(text, text);

  std::string_view coef = text.substr(0, k);
  std::string_view rest = text.substr(k + 2);
  double c = 1.0;
  if (coef == "-") c = -1.0;
  else if (coef == "+" || coef.empty()) c = 1.0;
  else {
    if (coef.back() == '*') coef.remove_suffix(1);
    c = parse_number(coef, text);
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("bad angle: " + std::string(text));
    d = parse_number(rest.substr(1), text);
    if (d == 0.0) throw std::invalid_argument("bad angle: " + std::string(text));
  }
  return c * pi / d;
}

}  // namespace robin
