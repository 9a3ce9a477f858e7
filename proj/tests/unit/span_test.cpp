#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <discrete_remez/pointset.hpp>
#include <discrete_remez/span.hpp>

#include "../support/oracles.hpp"

namespace dr = discrete_remez;

namespace {

dr::PointSet line(std::vector<double> xs) {
  return dr::PointSet(dr::Box::symmetric_unit(1), xs);
}

}  // namespace

TEST(Omega1d, GridClosedForm) {
  const auto r = dr::omega_1d(dr::make_grid_1d(11), 3);
  EXPECT_NEAR(r.omega_lo, 1.6, 1e-12);
  EXPECT_EQ(r.omega_lo, r.omega_hi);
  EXPECT_NEAR(r.witness_eps, 0.2, 1e-12);
  EXPECT_FALSE(r.attained);
  EXPECT_EQ(r.mode, dr::SpanMode::kExact);
}

TEST(Omega1d, GridApproachesBoxLength) {
  for (int s : {11, 21, 41}) {
    for (int d : {1, 2, 3}) {
      const double expected = 2.0 * (s - d) / (s - 1);
      EXPECT_NEAR(dr::omega_1d(dr::make_grid_1d(s), d).omega_lo, expected, 1e-12) << s << " " << d;
    }
  }
  EXPECT_GT(dr::omega_1d(dr::make_grid_1d(41), 1).omega_lo, 1.9);
}

TEST(Omega1d, SmallSetsHaveZeroSpan) {
  EXPECT_EQ(dr::omega_1d(line({0.2}), 1).omega_lo, 0.0);
  EXPECT_EQ(dr::omega_1d(line({-0.5, 0.5}), 2).omega_lo, 0.0);
  EXPECT_EQ(dr::omega_1d(line({-0.5, 0.1, 0.5}), 3).omega_lo, 0.0);
  EXPECT_EQ(dr::omega_1d(line({-0.5, 0.1, 0.5}), 7).omega_hi, 0.0);
}

TEST(Omega1d, MatchesBruteForce) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto z = oracle::random_set(rng, 1, 2 + trial % 11);
    const auto pts = oracle::points_of(z);
    for (int d = 1; d <= 4; ++d) {
      const double expected = oracle::omega_1d(pts, d);
      EXPECT_NEAR(dr::omega_1d(z, d).omega_lo, expected, 1e-9 * (1.0 + expected));
    }
  }
}

TEST(Omega1d, NonIncreasingInDegree) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = oracle::random_set(rng, 1, 25);
    double prev = dr::omega_1d(z, 1).omega_lo;
    for (int d = 2; d <= 8; ++d) {
      const double v = dr::omega_1d(z, d).omega_lo;
      EXPECT_LE(v, prev + 1e-15);
      prev = v;
    }
  }
}

TEST(Omega1d, MonotoneInSet) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto big = oracle::random_set(rng, 1, 30);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < big.size(); i += 3) keep.push_back(i);
    const auto small = big.subset(keep);
    for (int d = 1; d <= 3; ++d) {
      EXPECT_LE(dr::omega_1d(small, d).omega_lo, dr::omega_1d(big, d).omega_lo + 1e-15);
    }
  }
}

TEST(OmegaNd, OneDimensionCollapses) {
  const auto z = dr::make_grid_1d(15);
  const auto r = dr::omega_nd(z, 2, dr::VitushkinModel::builtin(1, 2));
  EXPECT_EQ(r.omega_lo, r.omega_hi);
  EXPECT_DOUBLE_EQ(r.omega_lo, dr::omega_1d(z, 2).omega_lo);
}

TEST(OmegaNd, SmallPlanarGridIsZero) {
  for (int d = 2; d <= 4; ++d) {
    const int s = 2 * d - 1;
    const auto r = dr::omega_nd(dr::make_grid_nd(2, s), d, dr::VitushkinModel::builtin(2, d));
    EXPECT_EQ(r.omega_lo, 0.0);
    EXPECT_EQ(r.omega_hi, 0.0);
  }
}

TEST(OmegaNd, DensePlanarGridIsPositive) {
  const auto r = dr::omega_nd(dr::make_grid_nd(2, 41), 1, dr::VitushkinModel::builtin(2, 1));
  EXPECT_EQ(r.mode, dr::SpanMode::kInterval);
  EXPECT_GT(r.omega_lo, 0.0);
  EXPECT_LE(r.omega_lo, r.omega_hi);
}

TEST(OmegaNd, MinDistanceBoundBelowLowerEnd) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const auto z = oracle::random_set(rng, 2, 60 + 20 * trial);
    for (int d = 1; d <= 2; ++d) {
      const auto model = dr::VitushkinModel::builtin(2, d);
      const auto r = dr::omega_nd(z, d, model);
      EXPECT_LE(dr::omega_min_distance_bound(z, d, model), r.omega_lo + 1e-15);
      EXPECT_LE(r.omega_lo, r.omega_hi);
      EXPECT_GE(r.omega_lo, 0.0);
    }
  }
}

TEST(OmegaNd, LowerEndBelowUpperEndOfSuperset) {
  std::mt19937_64 rng(59);
  const auto big = oracle::random_set(rng, 2, 200);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < big.size(); i += 2) keep.push_back(i);
  const auto small = big.subset(keep);
  const auto model = dr::VitushkinModel::builtin(2, 1);
  EXPECT_LE(dr::omega_nd(small, 1, model).omega_lo, dr::omega_nd(big, 1, model).omega_hi);
}

TEST(OmegaPositive, Examples) {
  const auto m1 = dr::VitushkinModel::builtin(1, 3);
  EXPECT_TRUE(dr::omega_positive(line({-0.9, -0.88, 0.1, 0.95}), 3, m1).positive);
  EXPECT_FALSE(dr::omega_positive(line({-0.9, 0.1, 0.95}), 3, m1).positive);
  EXPECT_FALSE(dr::omega_positive(dr::make_grid_nd(2, 3), 3, dr::VitushkinModel::builtin(2, 3)).positive);
}

TEST(OmegaPositive, WitnessIsStrict) {
  const auto model = dr::VitushkinModel::builtin(2, 1);
  const auto w = dr::omega_positive(dr::make_grid_nd(2, 41), 1, model);
  ASSERT_TRUE(w.positive);
  EXPECT_GT(static_cast<double>(w.count), model(w.eps));
  EXPECT_DOUBLE_EQ(w.vitushkin, model(w.eps));
}

TEST(MinDistanceBound, Examples) {
  const auto z = line({0.0, 0.3, 0.6});
  EXPECT_NEAR(dr::omega_min_distance_bound(z, 2, dr::VitushkinModel::builtin(1, 2)), 0.3, 1e-15);
  EXPECT_EQ(dr::omega_min_distance_bound(z, 3, dr::VitushkinModel::builtin(1, 3)), 0.0);
  const auto g = dr::make_grid_1d(11);
  EXPECT_NEAR(dr::omega_min_distance_bound(g, 3, dr::VitushkinModel::builtin(1, 3)), 1.6, 1e-12);
}

TEST(SpanCurve, PeaksAtOmega) {
  const auto z = dr::make_grid_1d(11);
  const auto model = dr::VitushkinModel::builtin(1, 3);
  const auto curve = dr::span_curve(z, model);
  ASSERT_FALSE(curve.empty());
  double peak = 0.0;
  for (const auto& c : curve) peak = std::max(peak, c.value_lo);
  EXPECT_NEAR(peak, 1.6, 1e-12);
  const auto csv = dr::curve_to_csv(curve);
  EXPECT_NE(csv.find("eps"), std::string::npos);
}
