#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "robin/angle.hpp"
#include "robin/io.hpp"

using namespace robin;

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333333");
  EXPECT_EQ(format_number(3 * 3.141592653589793), "9.42477796076938");
  EXPECT_EQ(format_number(25.0), "25");
  EXPECT_EQ(round15(1.0 / 3), 0.333333333333333);
}

TEST(Angle, Parse) {
  const double pi = 3.141592653589793;
  EXPECT_DOUBLE_EQ(parse_theta("0.25"), 0.25);
  EXPECT_DOUBLE_EQ(parse_theta("pi/4"), pi / 4);
  EXPECT_DOUBLE_EQ(parse_theta("3pi/4"), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(parse_theta("-pi/8"), -pi / 8);
  EXPECT_DOUBLE_EQ(parse_theta("atan:7/9"), std::atan2(7.0, 9.0));
  EXPECT_THROW(parse_theta("banana"), std::invalid_argument);
  EXPECT_THROW(parse_theta("pi/0"), std::invalid_argument);
  EXPECT_NEAR(normalize_theta(-pi / 8), 7 * pi / 8, 1e-15);
  EXPECT_EQ(normalize_theta(pi), 0.0);
}

TEST(Io, SpectrumCsv) {
  std::ostringstream os;
  write_spectrum_csv(os, build_spectrum(0.0, 1.0));
  EXPECT_EQ(os.str(),
            "i,j,alpha_i,alpha_j,lambda,label_lo,label_hi\n"
            "0,0,0,0,0,1,1\n"
            "0,1,0,3.14159265358979,1,2,3\n"
            "1,0,3.14159265358979,0,1,2,3\n");
}

TEST(Io, SpectrumJsonDeterministic) {
  const SpectrumTable t = build_spectrum(0.01, 30.0);
  const std::string a = spectrum_json(t), b = spectrum_json(build_spectrum(0.01, 30.0));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["h"], 0.01);
  EXPECT_TRUE(j.contains("levels"));
}

TEST(Io, CountJson) {
  const NodalCountResult r = count_nodal_domains(ThetaFamily(0, 2, 3.141592653589793 / 4, 0.0));
  const auto j = nlohmann::json::parse(count_json(r));
  EXPECT_EQ(j["mu"], 5);
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(count_json(r), count_json(count_nodal_domains(ThetaFamily(0, 2, 3.141592653589793 / 4, 0.0))));
}

TEST(Io, VerdictsCsv) {
  ScanOptions o;
  o.n_max = 3;
  const ScanReport r = courant_scan(o);
  std::ostringstream os;
  write_verdicts_csv(os, r);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,h,status,decided_by,lambda,multiplicity");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
  const auto j = nlohmann::json::parse(verdicts_json(r));
  EXPECT_EQ(j.size() > 0, true);
}
