#include "robin/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "json.hpp"

namespace robin {

using nlohmann::ordered_json;

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (std::string_view(buf) == "-0") return "0";
  return buf;
}

double round15(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

namespace {

// Integral values stay integers in JSON, everything else is rounded.
ordered_json num(double v) {
  const double r = round15(v);
  if (std::fabs(r) < 9.0e15 && r == std::floor(r)) return static_cast<long long>(r);
  return r;
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const SpectrumTable& t) {
  os << "i,j,alpha_i,alpha_j,lambda,label_lo,label_hi\n";
  for (const auto& l : t.levels)
    for (const auto& p : l.pairs)
      os << p.i << ',' << p.j << ',' << format_number(t.alphas[p.i].alpha) << ','
         << format_number(t.alphas[p.j].alpha) << ',' << format_number(l.value) << ','
         << l.label_lo << ',' << l.label_hi << '\n';
}

std::string spectrum_json(const SpectrumTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& l : t.levels) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : l.pairs) pairs.push_back({p.i, p.j});
    rows.push_back({{"lambda", num(l.value)},
                    {"pairs", pairs},
                    {"label_lo", l.label_lo},
                    {"label_hi", l.label_hi}});
  }
  ordered_json j = {{"h", num(t.h)}, {"lambda_max", num(t.lambda_max)},
                    {"index_cap", t.index_cap}, {"levels", rows}};
  return j.dump(2) + "\n";
}

std::string count_json(const NodalCountResult& r) {
  ordered_json counts = ordered_json::array();
  for (const auto& c : r.counts)
    counts.push_back({{"level", c.level}, {"mu", c.mu}, {"mu_inn", c.mu_inn}, {"mu_out", c.mu_out}});
  ordered_json j = {{"p", r.p},
                    {"q", r.q},
                    {"theta", num(r.theta)},
                    {"h", num(r.h)},
                    {"mu", r.mu},
                    {"mu_inn", r.mu_inn},
                    {"mu_out", r.mu_out},
                    {"boundary_zeros", r.boundary_zeros},
                    {"tangencies", r.tangencies},
                    {"level", r.level},
                    {"certified", r.certified},
                    {"counts", counts}};
  if (r.contradiction) j["contradiction"] = {{"rule", r.contradiction->rule}, {"detail", r.contradiction->detail}};
  return j.dump(2) + "\n";
}

std::string critical_json(const CriticalReport& r) {
  ordered_json pts = ordered_json::array();
  for (const auto& c : r.points)
    pts.push_back({{"p", c.p},
                   {"q", c.q},
                   {"h", num(c.h)},
                   {"side", side_name(c.side)},
                   {"position", num(c.position)},
                   {"theta_star", num(c.theta_star)},
                   {"kind", kind_name(c.kind)},
                   {"residuals", {{"value", num(c.residual_value)},
                                  {"tangential", num(c.residual_tangential)}}}});
  ordered_json j = {{"p", r.p}, {"q", r.q}, {"h", num(r.h)}, {"critical_points", pts}};
  if (r.theta02)
    j["critical_theta_02"] = {{"theta1", num(r.theta02->theta1)},
                              {"theta2", num(r.theta02->theta2)},
                              {"theta3", num(r.theta02->theta3)}};
  if (r.theta03)
    j["critical_theta_03"] = {{"y_c", num(r.theta03->y_c)}, {"theta", num(r.theta03->theta)}};
  return j.dump(2) + "\n";
}

std::string verdicts_json(const ScanReport& r) {
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json ev = ordered_json::object();
    for (const auto& [k, x] : v.evidence) ev[k] = num(x);
    ordered_json item = {{"h", num(v.h)},
                         {"n", v.n},
                         {"status", status_name(v.status)},
                         {"decided_by", v.decided_by.empty() ? ordered_json(nullptr)
                                                             : ordered_json(v.decided_by)},
                         {"evidence", ev}};
    if (!v.fired.empty()) item["fired"] = v.fired;
    vs.push_back(std::move(item));
  }
  ordered_json cs = ordered_json::array();
  for (const auto& c : r.contradictions) cs.push_back({{"rule", c.rule}, {"detail", c.detail}});
  ordered_json j = {{"h", num(r.h)}, {"verdicts", vs}, {"contradictions", cs}};
  return j.dump(2) + "\n";
}

void write_verdicts_csv(std::ostream& os, const ScanReport& r) {
  os << "n,h,status,decided_by,lambda,multiplicity\n";
  for (const auto& v : r.verdicts) {
    auto ev = [&](const char* k) {
      auto it = v.evidence.find(k);
      return it == v.evidence.end() ? std::string() : format_number(it->second);
    };
    os << v.n << ',' << format_number(v.h) << ',' << status_name(v.status) << ','
       << v.decided_by << ',' << ev("lambda") << ',' << ev("multiplicity") << '\n';
  }
}

}  // namespace robin
