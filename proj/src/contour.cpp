#include "robin/contour.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_map>

#include "robin/io.hpp"
#include "robin/nodal.hpp"

namespace robin {

ContourSet nodal_contours(const ThetaFamily& f, int level) {
  const SampleGrid g = sample_grid(f, level);
  const long n = g.n, m = n + 1;
  const double eps = 1e-12 * g.max_abs;
  auto val = [&](long i, long j) {
    const double v = g.values[i * m + j];
    return std::fabs(v) < eps ? 0.0 : v;
  };
  auto inside = [&](long i, long j) { return val(i, j) > 0.0; };

  // edge ids: 2 (i m + j) for (i,j)-(i+1,j), +1 for (i,j)-(i,j+1)
  std::unordered_map<long, Point2> pts;
  auto crossing = [&](long id) {
    auto it = pts.find(id);
    if (it != pts.end()) return;
    const long base = id / 2, i = base / m, j = base % m;
    const long i2 = (id & 1) ? i : i + 1, j2 = (id & 1) ? j + 1 : j;
    const double v0 = val(i, j), v1 = val(i2, j2);
    const double t = (v0 == v1) ? 0.5 : v0 / (v0 - v1);
    pts[id] = {g.coords[i] + t * (g.coords[i2] - g.coords[i]),
               g.coords[j] + t * (g.coords[j2] - g.coords[j])};
  };

  std::vector<std::array<long, 2>> segs;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const bool c[4] = {inside(i, j), inside(i + 1, j), inside(i + 1, j + 1), inside(i, j + 1)};
      const long e[4] = {2 * (i * m + j), 2 * ((i + 1) * m + j) + 1, 2 * (i * m + j + 1),
                         2 * (i * m + j) + 1};
      const bool cut[4] = {c[0] != c[1], c[1] != c[2], c[3] != c[2], c[0] != c[3]};
      const int ncut = cut[0] + cut[1] + cut[2] + cut[3];
      if (ncut == 2) {
        long a = -1, b = -1;
        for (int k = 0; k < 4; ++k)
          if (cut[k]) (a < 0 ? a : b) = e[k];
        segs.push_back({a, b});
      } else if (ncut == 4) {
        const double centre = 0.25 * (val(i, j) + val(i + 1, j) + val(i + 1, j + 1) + val(i, j + 1));
        if ((centre > 0.0) == c[0]) {
          segs.push_back({e[0], e[1]});
          segs.push_back({e[2], e[3]});
        } else {
          segs.push_back({e[3], e[0]});
          segs.push_back({e[1], e[2]});
        }
      }
    }
  for (const auto& s : segs) {
    crossing(s[0]);
    crossing(s[1]);
  }

  std::unordered_map<long, std::vector<std::size_t>> at;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    at[segs[k][0]].push_back(k);
    at[segs[k][1]].push_back(k);
  }
  std::vector<bool> used(segs.size(), false);
  auto other = [&](std::size_t k, long id) { return segs[k][0] == id ? segs[k][1] : segs[k][0]; };
  auto walk = [&](Polyline& pl, std::size_t k, long from) {
    long id = from;
    for (;;) {
      used[k] = true;
      id = other(k, id);
      pl.points.push_back(pts[id]);
      std::size_t next = segs.size();
      for (std::size_t c : at[id])
        if (!used[c]) next = c;
      if (next == segs.size()) return id;
      k = next;
    }
  };

  ContourSet out;
  out.p = f.p();
  out.q = f.q();
  out.theta = f.theta();
  out.h = f.h();
  // open chains first (start at an end), then the remaining loops
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (used[k]) continue;
      long start = -1;
      if (pass == 0) {
        for (long id : segs[k])
          if (at[id].size() == 1) start = id;
        if (start < 0) continue;
      } else {
        start = segs[k][0];
      }
      Polyline pl;
      pl.points.push_back(pts[start]);
      const long end = walk(pl, k, start);
      pl.closed = end == start && pass == 1;
      out.lines.push_back(std::move(pl));
    }
  return out;
}

namespace {

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

void write_contours_svg(std::ostream& os, const std::vector<ContourSet>& sets) {
  const double h = 0.5 * pi;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1200\" height=\"1200\" "
                "viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                -h, -h, pi, pi);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\" fill=\"none\" "
                "stroke=\"#000000\" stroke-width=\"0.008\"/>\n",
                -h, -h, pi, pi);
  os << buf;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const ContourSet& cs = sets[s];
    os << "<g stroke=\"" << palette[s % std::size(palette)]
       << "\" stroke-width=\"0.006\" fill=\"none\" data-theta=\"" << format_number(cs.theta)
       << "\" data-h=\"" << format_number(cs.h) << "\">\n";
    for (const auto& pl : cs.lines) {
      os << "<path d=\"";
      for (std::size_t k = 0; k < pl.points.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%s%.6f %.6f", k == 0 ? "M" : " L", pl.points[k].x,
                      -pl.points[k].y + 0.0);
        os << buf;
      }
      if (pl.closed) os << " Z";
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

void write_contours_csv(std::ostream& os, const std::vector<ContourSet>& sets) {
  os << "theta,h,segment_id,x,y\n";
  for (const auto& cs : sets) {
    const std::string th = format_number(cs.theta), hh = format_number(cs.h);
    for (std::size_t k = 0; k < cs.lines.size(); ++k)
      for (const auto& p : cs.lines[k].points)
        os << th << ',' << hh << ',' << k << ',' << format_number(p.x) << ','
           << format_number(p.y) << '\n';
  }
}

}  // namespace robin
