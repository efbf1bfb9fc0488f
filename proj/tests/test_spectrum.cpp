#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "neumann_table.hpp"
#include "robin/spectrum.hpp"

using namespace robin;

namespace {

std::vector<IndexPair> sorted(std::vector<IndexPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const SpectrumTable& neumann() {
  static const SpectrumTable t = build_spectrum(0.0, 150.0);
  return t;
}

}  // namespace

TEST(Spectrum, GoldenNeumannTable) {
  const SpectrumTable& t = neumann();
  for (const NeumannRow& r : kNeumannRows) {
    auto idx = t.level_index_of_pair({r.m, r.n});
    ASSERT_TRUE(idx.has_value()) << r.m << "," << r.n;
    const EigenLevel& lv = t.levels[*idx];
    EXPECT_EQ(lv.value, r.value);
    EXPECT_EQ(lv.label_lo, r.k_lo) << r.m << "," << r.n;
    EXPECT_EQ(lv.label_hi, r.k_hi) << r.m << "," << r.n;
  }
  // and nothing extra below 146
  int pairs = 0;
  for (const EigenLevel& lv : t.levels)
    if (lv.value <= 146) pairs += lv.multiplicity();
  EXPECT_EQ(pairs, static_cast<int>(std::size(kNeumannRows)));
}

TEST(Spectrum, ListedLevels) {
  const SpectrumTable t = build_spectrum(0.0, 130.0);
  const EigenLevel& five = t.levels[*t.level_index_of_pair({2, 1})];
  EXPECT_EQ(sorted(five.pairs), (std::vector<IndexPair>{{1, 2}, {2, 1}}));
  EXPECT_EQ(five.label_lo, 7);
  EXPECT_EQ(five.label_hi, 8);
  const EigenLevel& l25 = t.level_of_label(24);
  EXPECT_EQ(l25.value, 25);
  EXPECT_EQ(sorted(l25.pairs), (std::vector<IndexPair>{{0, 5}, {3, 4}, {4, 3}, {5, 0}}));
  EXPECT_EQ(l25.label_lo, 23);
  EXPECT_EQ(l25.label_hi, 26);
  const EigenLevel& l130 = t.level_of_label(114);
  EXPECT_EQ(l130.value, 130);
  EXPECT_EQ(sorted(l130.pairs), (std::vector<IndexPair>{{3, 11}, {7, 9}, {9, 7}, {11, 3}}));
  EXPECT_EQ(l130.label_hi, 117);
}

TEST(Spectrum, LabelsAreContiguous) {
  for (double h : {0.0, 0.01, 0.1}) {
    const SpectrumTable t = build_spectrum(h, 200.0);
    int next = 1;
    double prev = -1;
    for (const EigenLevel& lv : t.levels) {
      EXPECT_EQ(lv.label_lo, next);
      EXPECT_EQ(lv.label_hi - lv.label_lo + 1, lv.multiplicity());
      EXPECT_GT(lv.value, prev);
      EXPECT_TRUE(std::is_sorted(lv.pairs.begin(), lv.pairs.end()));
      prev = lv.value;
      next = lv.label_hi + 1;
    }
    EXPECT_EQ(t.label_count(), next - 1);
  }
}

TEST(Spectrum, CompletenessFailure) {
  EXPECT_THROW(build_spectrum(0.0, 100.0, 1e-9, 5), CompletenessFailure);
  EXPECT_NO_THROW(build_spectrum(0.0, 100.0, 1e-9, 10));
}

TEST(Spectrum, RobinSplitsAtSmallH) {
  const SpectrumTable t = build_spectrum(0.01, 30.0);
  const EigenLevel& a = t.levels[*t.level_index_of_pair({5, 0})];
  const EigenLevel& b = t.levels[*t.level_index_of_pair({4, 3})];
  EXPECT_EQ(a.multiplicity(), 2);
  EXPECT_EQ(b.multiplicity(), 2);
  EXPECT_LT(a.value, b.value);
  EXPECT_EQ(a.label_lo, 23);
  EXPECT_EQ(b.label_lo, 25);
}

TEST(Counting, Examples) {
  const SpectrumTable& t = neumann();
  EXPECT_EQ(counting_function(t, 2.0), 3);
  EXPECT_EQ(counting_function(t, 0.5), 1);
  EXPECT_EQ(counting_function(t, 26.0), 26);
  EXPECT_EQ(counting_function(t, 0.0), 0);
  EXPECT_THROW(counting_function(t, 151.0), std::domain_error);
}

TEST(Counting, Monotone) {
  const SpectrumTable& t = neumann();
  int prev = 0;
  for (int k = 0; k <= 1500; ++k) {
    const int c = counting_function(t, 0.1 * k);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(Weyl, Sandwich) {
  const SpectrumTable& t = neumann();
  const WeylCheck w = weyl_sandwich_check(t, 2.0);
  EXPECT_TRUE(w.pass);
  EXPECT_EQ(w.count, 3);
  EXPECT_NEAR(w.lower, 1.5707963267948966, 1e-12);
  EXPECT_NEAR(w.upper, 4.5707963267948966, 1e-12);
  EXPECT_TRUE(weyl_sandwich_check(t, 100.0).pass);
  EXPECT_TRUE(weyl_sandwich_check(t, 1e-6).pass);
  for (int k = 1; k <= 150; ++k) EXPECT_TRUE(weyl_sandwich_check(t, k).pass) << k;
  EXPECT_THROW(weyl_sandwich_check(build_spectrum(0.01, 10.0), 2.0), std::invalid_argument);
}

TEST(Jn, Examples) {
  const SpectrumTable& t = neumann();
  EXPECT_EQ(jn_value(t, 5).j_n, 2);
  EXPECT_EQ(jn_value(t, 86).j_n, 7);
  EXPECT_EQ(jn_value(t, 1).j_n, 0);
}

TEST(Crossing, NeumannCoincidence) {
  const CrossingResult r = find_crossing({5, 0}, {4, 3}, 0.5);
  ASSERT_TRUE(r.h_star.has_value());
  EXPECT_EQ(*r.h_star, 0.0);
  EXPECT_FALSE(r.contradiction.has_value());
  EXPECT_TRUE(r.ordering_checked);
  EXPECT_TRUE(r.ordering_holds);
  for (int k = 1; k <= 50; ++k) {
    const double h = 0.01 * k;
    EXPECT_LT(pair_eigenvalue(5, 0, h), pair_eigenvalue(4, 3, h));
  }
}

TEST(Crossing, SymmetricPairRejected) {
  EXPECT_THROW(find_crossing({1, 0}, {0, 1}, 1.0), std::invalid_argument);
}

TEST(Crossing, NoneWhenOrdered) {
  const CrossingResult r = find_crossing({2, 1}, {3, 0}, 2.0);
  EXPECT_FALSE(r.h_star.has_value());
  EXPECT_FALSE(r.contradiction.has_value());
}

TEST(Decay, QuadrupleSplits) {
  const SpectrumTable& t = neumann();
  const DecayReport d = multiplicity_decay_check(t.level_of_label(23), 0.01);
  ASSERT_EQ(d.sublevels.size(), 2u);
  EXPECT_EQ(sorted(d.sublevels[0].pairs), (std::vector<IndexPair>{{0, 5}, {5, 0}}));
  EXPECT_EQ(sorted(d.sublevels[1].pairs), (std::vector<IndexPair>{{3, 4}, {4, 3}}));
  EXPECT_TRUE(d.refines);
  EXPECT_FALSE(d.contradiction.has_value());
}

TEST(Decay, TripleSplits) {
  const SpectrumTable& t = neumann();
  const DecayReport d = multiplicity_decay_check(t.levels[*t.level_index_of_pair({5, 5})], 0.01);
  ASSERT_EQ(d.sublevels.size(), 2u);
  EXPECT_EQ(sorted(d.sublevels[0].pairs), (std::vector<IndexPair>{{1, 7}, {7, 1}}));
  EXPECT_EQ(d.sublevels[1].pairs, (std::vector<IndexPair>{{5, 5}}));
}

TEST(Decay, SimpleLevel) {
  const SpectrumTable& t = neumann();
  const DecayReport d = multiplicity_decay_check(t.levels[*t.level_index_of_pair({1, 1})], 0.01);
  EXPECT_EQ(d.sublevels.size(), 1u);
  EXPECT_THROW(multiplicity_decay_check(t.level_of_label(23), 0.2), std::invalid_argument);
}

TEST(Spectrum, MonotoneInH) {
  const double hs[] = {0.0, 0.005, 0.01, 0.05, 0.1};
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) {
      if (i * i + j * j > 150) continue;
      double prev = -1;
      for (double h : hs) {
        const double v = pair_eigenvalue(i, j, h);
        EXPECT_GT(v, prev);
        prev = v;
      }
    }
}

TEST(Spectrum, GroundSlope) {
  const double h = 1e-5;
  EXPECT_NEAR(pair_eigenvalue(0, 0, h) / h / (4 / 3.141592653589793), 1.0, 0.01);
}
