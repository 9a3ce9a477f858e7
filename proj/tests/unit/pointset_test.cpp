#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include <discrete_remez/error.hpp>
#include <discrete_remez/pointset.hpp>

#include "../support/error_code.hpp"
#include "../support/oracles.hpp"

namespace dr = discrete_remez;

using testing_support::code_of;
using Rows = std::vector<std::vector<double>>;

TEST(Box, RejectsEmptySides) {
  EXPECT_EQ(code_of([] { dr::Box({0.0}, {0.0}); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::Box({1.0, 0.0}, {0.0, 1.0}); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::Box({0.0}, {1.0, 2.0}); }), dr::ErrorCode::kInvalidParameter);
}

TEST(Box, VolumeAndDiameter) {
  const dr::Box b({-1.0, 0.0}, {1.0, 0.5});
  EXPECT_DOUBLE_EQ(b.volume(), 1.0);
  EXPECT_DOUBLE_EQ(b.diameter(), 2.0);
  EXPECT_DOUBLE_EQ(dr::Box::symmetric_unit(3).volume(), 8.0);
}

TEST(PointSet, EnforcesInvariants) {
  const auto unit = dr::Box::symmetric_unit(2);
  EXPECT_EQ(code_of([&] { dr::PointSet(unit, {{0.0, 0.0}, {0.0, 0.0}}); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([&] { dr::PointSet(unit, Rows{{0.0, 1.5}}); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([&] { dr::PointSet(unit, Rows{{0.0}}); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_NO_THROW(dr::PointSet(unit, Rows{{1.0, -1.0}}));  // boundary is inside
}

TEST(PointSet, DuplicateErrorNamesBothIndices) {
  try {
    dr::PointSet(dr::Box::symmetric_unit(1), std::vector<double>{0.1, 0.5, 0.1});
    FAIL();
  } catch (const dr::Error& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find('0'), std::string::npos);
    EXPECT_NE(what.find('2'), std::string::npos);
  }
}

TEST(Generators, Grid1d) {
  EXPECT_EQ(dr::make_grid_1d(2).coords(), (std::vector<double>{-1.0, 1.0}));
  EXPECT_EQ(dr::make_grid_1d(3).coords(), (std::vector<double>{-1.0, 0.0, 1.0}));
  const auto g = dr::make_grid_1d(11);
  ASSERT_EQ(g.size(), 11u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g.coord(i, 0), -1.0 + 0.2 * i, 1e-15);
  EXPECT_EQ(g.coord(10, 0), 1.0);
  EXPECT_EQ(code_of([] { dr::make_grid_1d(1); }), dr::ErrorCode::kInvalidParameter);
}

TEST(Generators, GridSpacingIsExactUpToRounding) {
  for (int s = 2; s <= 200; ++s) {
    const double expected = 2.0 / (s - 1);
    const double got = dr::min_pairwise_distance(dr::make_grid_1d(s));
    // Nodes are -1 + 2i/(s-1); each carries a rounding error of at most one ulp of 1.
    EXPECT_LE(std::abs(got - expected), 2.0 * std::numeric_limits<double>::epsilon()) << s;
  }
}

TEST(Generators, GridNd) {
  EXPECT_EQ(dr::make_grid_nd(1, 3), dr::make_grid_1d(3));
  const auto g = dr::make_grid_nd(2, 3);
  EXPECT_EQ(g.size(), 9u);
  bool origin = false;
  int corners = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.coord(i, 0) == 0.0 && g.coord(i, 1) == 0.0) origin = true;
    if (std::abs(g.coord(i, 0)) == 1.0 && std::abs(g.coord(i, 1)) == 1.0) ++corners;
  }
  EXPECT_TRUE(origin);
  EXPECT_EQ(corners, 4);
  EXPECT_EQ(dr::make_grid_nd(2, 11).size(), 121u);
  EXPECT_EQ(code_of([] { dr::make_grid_nd(4, 100, 1000); }), dr::ErrorCode::kTooLarge);
}

TEST(Generators, PowerAndGeometricSets) {
  EXPECT_EQ(dr::make_power_set(1.0, 3).coords(), (std::vector<double>{1.0, 0.5, 1.0 / 3.0}));
  EXPECT_EQ(dr::make_power_set(2.0, 2).coords(), (std::vector<double>{1.0, 0.25}));
  EXPECT_EQ(dr::make_power_set(1.0, 1).size(), 1u);
  EXPECT_EQ(dr::make_geometric_set(0.5, 4).coords(), (std::vector<double>{1.0, 0.5, 0.25, 0.125}));
  EXPECT_EQ(dr::make_geometric_set(0.9, 1).coords(), (std::vector<double>{1.0}));
  EXPECT_EQ(code_of([] { dr::make_geometric_set(1.0, 3); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::make_geometric_set(0.0, 3); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(dr::make_power_set(1.0, 5).box(), dr::Box::symmetric_unit(1));
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(dr::make_power_set(1.5, 40), dr::make_power_set(1.5, 40));
  EXPECT_EQ(dr::make_grid_nd(3, 7), dr::make_grid_nd(3, 7));
}

TEST(MinPairwiseDistance, Examples) {
  EXPECT_NEAR(dr::min_pairwise_distance(dr::make_grid_1d(11)), 0.2, 1e-15);
  const dr::PointSet two(dr::Box::symmetric_unit(2), {{0.0, 0.0}, {0.3, 0.1}});
  EXPECT_DOUBLE_EQ(dr::min_pairwise_distance(two), 0.3);
  EXPECT_DOUBLE_EQ(dr::min_pairwise_distance(dr::make_geometric_set(0.5, 3)), 0.25);
  EXPECT_EQ(code_of([] { dr::min_pairwise_distance(dr::make_power_set(1.0, 1)); }),
            dr::ErrorCode::kInsufficientPoints);
}

TEST(MinPairwiseDistance, MatchesAllPairs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto z = oracle::random_set(rng, 1 + t % 3, 30);
    const auto pts = oracle::points_of(z);
    double best = 1e9;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, oracle::linf(pts[i], pts[j]));
    }
    EXPECT_EQ(dr::min_pairwise_distance(z), best);
  }
}

TEST(DenseSubset, GridExample) {
  const auto g = dr::make_grid_1d(11);
  const auto sub = dr::dense_subset(g, 0.4);
  EXPECT_LE(sub.size(), 6u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double nearest = 1e9;
    for (std::size_t j = 0; j < sub.size(); ++j) nearest = std::min(nearest, dr::linf_distance(g.point(i), sub.point(j)));
    EXPECT_LE(nearest, 0.2 + 1e-12);
  }
}

TEST(DenseSubset, Degenerate) {
  EXPECT_EQ(dr::dense_subset(dr::make_grid_1d(11), 10.0).size(), 1u);
  const auto single = dr::make_power_set(1.0, 1);
  EXPECT_EQ(dr::dense_subset(single, 0.1), single);
}

TEST(DenseSubset, SubsetAndCoverageProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t dim = 1 + t % 3;
    const auto z = oracle::random_set(rng, dim, 40);
    const double eps = 0.05 + 0.05 * (t % 7);
    const auto sub = dr::dense_subset(z, eps);
    ASSERT_LE(sub.size(), z.size());
    for (std::size_t j = 0; j < sub.size(); ++j) {
      bool member = false;
      for (std::size_t i = 0; i < z.size() && !member; ++i) member = dr::linf_distance(z.point(i), sub.point(j)) == 0.0;
      EXPECT_TRUE(member);
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
      double nearest = 1e9;
      for (std::size_t j = 0; j < sub.size(); ++j) nearest = std::min(nearest, dr::linf_distance(z.point(i), sub.point(j)));
      EXPECT_LE(nearest, eps / 2 + 1e-12);
    }
  }
}
