#include <gtest/gtest.h>

#include <cmath>

#include "bell/bounds.hpp"
#include "bell/measures.hpp"
#include "bell/oracle.hpp"
#include "test_support.hpp"

namespace bell {
namespace {

const double kTsirelsonK = 2 * std::sqrt(2.0) - 2;

TEST(Theorem1Test, Examples) {
  auto v = check_theorem1(0, 0, 2);
  EXPECT_TRUE(v.pass);
  EXPECT_DOUBLE_EQ(v.slack, 0.0);

  v = check_theorem1(0.6, 0.65, 2.7);
  EXPECT_TRUE(v.pass);
  EXPECT_NEAR(v.slack, 1.05, 1e-12);

  v = check_theorem1(0, 0, 3);
  EXPECT_FALSE(v.pass);
  EXPECT_DOUBLE_EQ(v.slack, -1.0);
}

TEST(Theorem2Test, Examples) {
  auto v = check_theorem2({0, 0, 2});
  EXPECT_TRUE(v.pass);
  EXPECT_DOUBLE_EQ(v.slacks[1], 0.0);
  EXPECT_DOUBLE_EQ(v.slacks[2], 0.0);
  EXPECT_DOUBLE_EQ(v.slacks[4], 0.0);

  v = check_theorem2({2.0 / 3.0, 0.75, 4});
  EXPECT_TRUE(v.pass);
  EXPECT_NEAR(v.slacks[0], 0.0, 1e-15);
  EXPECT_NEAR(v.slacks[1], 0.0, 1e-15);
  EXPECT_NEAR(v.slacks[4], 0.0, 1e-15);

  v = check_theorem2({0.5, 0.05, 2.6});
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.violated, "b5");
  EXPECT_NEAR(v.slacks[4], -0.0625, 1e-12);
}

TEST(Theorem2Test, HiddennessOneIsExcluded) {
  const auto v = check_theorem2({0, 1, 2});
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.violated, "b4");
}

TEST(TradeoffPointTest, SlacksAreTheAffineForms) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 5.0);
  for (int t = 0; t < 200; ++t) {
    const TradeoffPoint p{u(rng), u(rng), u(rng)};
    const auto s = p.slacks();
    EXPECT_DOUBLE_EQ(s[0], 4 - p.s);
    EXPECT_DOUBLE_EQ(s[1], 3 * p.m + 2 - p.s);
    EXPECT_DOUBLE_EQ(s[2], p.s - p.m - 2);
    EXPECT_DOUBLE_EQ(s[3], 1 - p.h);
    EXPECT_DOUBLE_EQ(s[4], p.h - p.s / 2 + 3 * p.m / 8 + 1);
  }
}

TEST(CardinalityTest, Examples) {
  auto v = check_cardinality_bound(testing::point_input());
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.clause, "n=1");
  EXPECT_DOUBLE_EQ(v.s_opt, 2.0);
  EXPECT_DOUBLE_EQ(v.m, 0.0);
  EXPECT_DOUBLE_EQ(v.h, 0.0);

  v = check_cardinality_bound(testing::two_lambda(0.1, 0.2, 0.3, 0.4));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.clause, "n=2");
  EXPECT_NEAR(v.lower, 2.6, 1e-15);
  EXPECT_NEAR(v.s_opt, 2.6, 1e-15);

  v = check_cardinality_bound(testing::three_lambda());
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.clause, "n=3");
  EXPECT_NEAR(v.upper, 3.2, 1e-12);
  EXPECT_NEAR(v.s_opt, 2.7, 1e-15);
}

TEST(CardinalityTest, NamesLargerClause) {
  const auto v = check_cardinality_bound(oracle::sample_input(5, 9));
  EXPECT_EQ(v.clause, "n>=4");
  EXPECT_TRUE(v.pass);
}

TEST(HmTest, Examples) {
  EXPECT_TRUE(check_hm(0, 0.3));
  EXPECT_TRUE(check_hm(0.6, 0.65));
  EXPECT_FALSE(check_hm(0.8, 0.05));
}

TEST(BoundsPropertyTest, EverySampledModelPassesAllChecks) {
  for (std::uint64_t seed = 0; seed < 5000; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto in = oracle::sample_input(n, oracle::derive_seed(77, seed));
    const auto r = measure(in);
    EXPECT_TRUE(check_theorem1(r.m, r.h, r.s_opt).pass) << seed;
    const auto t2 = check_theorem2({r.m, r.h, r.s_opt});
    EXPECT_TRUE(t2.pass) << seed << " " << t2.violated;
    EXPECT_TRUE(check_hm(r.m, r.h)) << seed;
    EXPECT_TRUE(check_cardinality_bound(in).pass) << seed;
  }
}

TEST(BoundsPropertyTest, TwoRowEquality) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto in = oracle::sample_input(2, seed);
    EXPECT_NEAR(2 + measurement_dependence(in), optimal_chsh(in), 1e-12);
  }
}

TEST(BoundsPropertyTest, PolyhedronImpliesHm) {
  std::size_t inside = 0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 19; ++j) {
      for (int k = 0; k <= 40; ++k) {
        const TradeoffPoint p{i * 0.05, j * 0.05, 2 + k * 0.05};
        if (!check_theorem2(p, 1e-12).pass) continue;
        ++inside;
        EXPECT_TRUE(check_hm(p.m, p.h, 1e-12)) << p.m << " " << p.h << " " << p.s;
      }
    }
  }
  EXPECT_GT(inside, 1000u);
}

TEST(RegionTest, TsirelsonSlice) {
  const auto spec = region(RegionKind::kSlice, kTsirelsonK);
  ASSERT_EQ(spec.vertices.size(), 4u);
  EXPECT_NEAR(spec.vertices[0][0], 0.27614, 5e-6);
  EXPECT_NEAR(spec.vertices[1][0], 0.82843, 5e-6);
  EXPECT_NEAR(spec.vertices[0][1], 0.31066, 5e-6);
  EXPECT_NEAR(spec.vertices[1][1], 0.10355, 5e-6);
  EXPECT_TRUE(in_slice(kTsirelsonK / 3, 3 * kTsirelsonK / 8, kTsirelsonK, 1e-12));
  EXPECT_FALSE(in_slice(0.27, 0.5, kTsirelsonK));
  EXPECT_FALSE(in_slice(0.5, 1.0, kTsirelsonK));
}

TEST(RegionTest, ZeroSliceIsSegment) {
  const auto spec = region(RegionKind::kSlice, 0.0);
  ASSERT_EQ(spec.vertices.size(), 2u);
  EXPECT_TRUE(in_slice(0, 0, 0));
  EXPECT_TRUE(in_slice(0, 0.99, 0));
  EXPECT_FALSE(in_slice(0, 1, 0));
  EXPECT_FALSE(in_slice(0.01, 0.5, 0));
  const auto samples = region_boundary_samples(spec, 0.1);
  for (const auto& p : samples.points) EXPECT_DOUBLE_EQ(p[0], 0.0);
}

TEST(RegionTest, PolyhedronVerticesAndEdges) {
  const auto spec = region(RegionKind::kPolyhedron);
  const std::vector<Point> expected{{0, 0, 2}, {0, 1, 2}, {2.0 / 3, 0.75, 4}, {2.0 / 3, 1, 4}, {2, 0.25, 4}, {2, 1, 4}};
  ASSERT_EQ(spec.vertices.size(), 6u);
  for (std::size_t v = 0; v < 6; ++v) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(spec.vertices[v][c], expected[v][c], 1e-15);
  }
  for (double step : {0.01, 0.5, 3.0}) {
    const auto s = region_boundary_samples(spec, step);
    EXPECT_EQ(s.points.size(), 6u);
    EXPECT_EQ(s.edges.size(), 9u);
  }
}

TEST(RegionTest, VerticesSatisfyHalfspaces) {
  for (auto kind : {RegionKind::kSlice, RegionKind::kUnion}) {
    for (double p : {0.0, 0.5, kTsirelsonK, 1.5, 2.0}) {
      const auto spec = region(kind, p);
      for (const auto& v : spec.vertices) EXPECT_TRUE(satisfies_all(spec.halfspaces, v, 1e-12));
    }
  }
  const auto poly = region(RegionKind::kPolyhedron);
  for (const auto& v : poly.vertices) EXPECT_TRUE(satisfies_all(poly.halfspaces, v, 1e-12));
}

TEST(RegionTest, ParameterOutOfRange) {
  EXPECT_THROW(region(RegionKind::kSlice, 3.0), std::out_of_range);
  EXPECT_THROW(region(RegionKind::kUnion, -0.1), std::out_of_range);
  EXPECT_THROW(region(RegionKind::kSlice, NAN), std::out_of_range);
}

TEST(RegionTest, SliceSamplesSatisfyTheorem2) {
  const auto spec = region(RegionKind::kSlice, kTsirelsonK);
  const auto samples = region_boundary_samples(spec, 0.1);
  std::size_t checked = 0;
  for (const auto& p : samples.points) {
    if (p[1] >= 1.0) {
      EXPECT_EQ(check_theorem2({p[0], p[1], 2 + kTsirelsonK}).violated, "b4");
      continue;
    }
    ++checked;
    EXPECT_TRUE(check_theorem2({p[0], p[1], 2 + kTsirelsonK}).pass) << p[0] << " " << p[1];
  }
  EXPECT_GT(checked, 5u);
  for (std::size_t j = 1; j < samples.points.size(); ++j) {
    const auto& a = samples.points[j - 1];
    const auto& b = samples.points[j];
    EXPECT_LE(std::hypot(a[0] - b[0], a[1] - b[1]), 0.1 + 1e-12);
  }
}

TEST(RegionTest, UnionContainsLowerRightCorner) {
  EXPECT_TRUE(in_union(2, 0.25, kTsirelsonK));
  EXPECT_TRUE(satisfies_all(region(RegionKind::kUnion, kTsirelsonK).halfspaces, {2, 0.25, 0}, 0.0));
  EXPECT_THROW(region_boundary_samples(region(RegionKind::kUnion, 1.0), 0.0), std::invalid_argument);
}

bool in_some_slice(double m, double h, double k0) {
  if (in_slice(m, h, k0, 1e-12)) return true;
  for (int l = 0; l <= 2000; ++l) {
    const double k = l / 1000.0;
    if (k > k0 && in_slice(m, h, k, 1e-12)) return true;
  }
  return false;
}

TEST(RegionTest, UnionEqualsSliceUnion) {
  for (double k0 : {0.0, 0.5, kTsirelsonK, 1.5}) {
    std::size_t mismatches = 0;
    for (int i = 0; i <= 200; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const double m = i / 100.0, h = j / 100.0;
        if (in_union(m, h, k0, 1e-12) != in_some_slice(m, h, k0)) ++mismatches;
      }
    }
    EXPECT_EQ(mismatches, 0u) << "k0 = " << k0;
  }
}

}  // namespace
}  // namespace bell
