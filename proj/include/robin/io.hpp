#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robin/courant.hpp"
#include "robin/critical.hpp"
#include "robin/nodal.hpp"
#include "robin/spectrum.hpp"

namespace robin {

// %.15g, with -0 printed as 0.
std::string format_number(double v);
// v rounded to 15 significant digits.
double round15(double v);

void write_spectrum_csv(std::ostream& os, const SpectrumTable& t);
std::string spectrum_json(const SpectrumTable& t);

std::string count_json(const NodalCountResult& r);

struct CriticalReport {
  int p = 0, q = 0;
  double h = 0.0;
  std::vector<BoundaryCriticalPoint> points;
  std::optional<Theta02> theta02;  // filled for (0,2)
  std::optional<Theta03> theta03;  // filled for (0,3)
};
std::string critical_json(const CriticalReport& r);

std::string verdicts_json(const ScanReport& r);
void write_verdicts_csv(std::ostream& os, const ScanReport& r);

}  // namespace robin
