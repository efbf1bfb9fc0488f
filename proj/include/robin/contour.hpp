#pragma once

#include <iosfwd>
#include <vector>

#include "robin/theta_family.hpp"

namespace robin {

struct Point2 {
  double x = 0.0, y = 0.0;
};

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

struct ContourSet {
  int p = 0, q = 0;
  double theta = 0.0, h = 0.0;
  std::vector<Polyline> lines;
};

// Marching squares on the (2^level + 1)^2 sample grid; saddle cells are
// resolved with the cell-centre average.
ContourSet nodal_contours(const ThetaFamily& f, int level = 8);

// 1200x1200 SVG, viewBox = the square, y pointing up, one colour per set.
void write_contours_svg(std::ostream& os, const std::vector<ContourSet>& sets);
// Columns: theta, h, segment_id, x, y.
void write_contours_csv(std::ostream& os, const std::vector<ContourSet>& sets);

}  // namespace robin
