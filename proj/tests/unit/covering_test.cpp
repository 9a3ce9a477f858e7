#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <discrete_remez/covering.hpp>
#include <discrete_remez/pointset.hpp>

#include "../support/error_code.hpp"
#include "../support/oracles.hpp"

namespace dr = discrete_remez;
using testing_support::code_of;

namespace {

dr::PointSet line(std::vector<double> xs) {
  return dr::PointSet(dr::Box::symmetric_unit(1), xs);
}

}  // namespace

TEST(CoveringNumber1d, GridAtHalf) {
  EXPECT_EQ(dr::covering_number_1d(dr::make_grid_1d(11), 0.5), 4u);
}

TEST(CoveringNumber1d, SingletonAndPair) {
  EXPECT_EQ(dr::covering_number_1d(line({0.3}), 1e-9), 1u);
  EXPECT_EQ(dr::covering_number_1d(line({0.3}), 5.0), 1u);
  const auto pair = line({-0.1, 0.25});
  EXPECT_EQ(dr::covering_number_1d(pair, 0.35), 1u);
  EXPECT_EQ(dr::covering_number_1d(pair, 0.3499), 2u);
}

TEST(CoveringNumber1d, RejectsNonPositiveEps) {
  const auto g = dr::make_grid_1d(5);
  EXPECT_EQ(code_of([&] { dr::covering_number_1d(g, 0.0); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([&] { dr::covering_number_1d(g, -1.0); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([&] { dr::covering_bounds_nd(g, 0.0); }), dr::ErrorCode::kInvalidParameter);
}

TEST(CoveringProfile, ThreePoints) {
  const auto profile = dr::covering_profile_1d(line({-1.0, 0.0, 1.0}));
  const auto& p = profile.pieces();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].count, 3u);
  EXPECT_DOUBLE_EQ(p[0].eps_min, 0.0);
  EXPECT_DOUBLE_EQ(p[0].eps_max, 1.0);
  EXPECT_EQ(p[1].count, 2u);
  EXPECT_DOUBLE_EQ(p[1].eps_min, 1.0);
  EXPECT_DOUBLE_EQ(p[1].eps_max, 2.0);
  EXPECT_EQ(p[2].count, 1u);
  EXPECT_DOUBLE_EQ(p[2].eps_min, 2.0);
  EXPECT_TRUE(std::isinf(p[2].eps_max));
}

TEST(CoveringProfile, Singleton) {
  const auto profile = dr::covering_profile_1d(line({0.0}));
  ASSERT_EQ(profile.pieces().size(), 1u);
  EXPECT_EQ(profile.pieces()[0].count, 1u);
  EXPECT_DOUBLE_EQ(profile.pieces()[0].eps_min, 0.0);
  EXPECT_TRUE(std::isinf(profile.pieces()[0].eps_max));
}

TEST(CoveringProfile, GridFirstMergeAtSpacing) {
  const auto profile = dr::covering_profile_1d(dr::make_grid_1d(11));
  EXPECT_EQ(profile.pieces().front().count, 11u);
  EXPECT_NEAR(profile.pieces().front().eps_max, 0.2, 1e-12);
}

TEST(CoveringProfile, TilesAndDecreases) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = oracle::random_set(rng, 1, 2 + trial % 12);
    const auto profile = dr::covering_profile_1d(z);
    const auto& p = profile.pieces();
    ASSERT_FALSE(p.empty());
    EXPECT_EQ(p.front().count, z.size());
    EXPECT_DOUBLE_EQ(p.front().eps_min, 0.0);
    EXPECT_EQ(p.back().count, 1u);
    EXPECT_TRUE(std::isinf(p.back().eps_max));
    for (std::size_t i = 1; i < p.size(); ++i) {
      EXPECT_LT(p[i].count, p[i - 1].count);
      EXPECT_EQ(p[i].eps_min, p[i - 1].eps_max);
    }
  }
}

TEST(CoveringProfile, MatchesPointwiseCountsAndOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const auto z = oracle::random_set(rng, 1, 3 + trial % 9);
    const auto pts = oracle::points_of(z);
    const auto profile = dr::covering_profile_1d(z);
    for (const auto& piece : profile.pieces()) {
      if (piece.eps_min > 0.0) {
        EXPECT_EQ(dr::covering_number_1d(z, piece.eps_min), piece.count);
        EXPECT_EQ(oracle::min_cube_cover(pts, piece.eps_min), piece.count);
      }
      if (std::isfinite(piece.eps_max)) {
        const double mid = 0.5 * (piece.eps_min + piece.eps_max);
        EXPECT_EQ(dr::covering_number_1d(z, mid), piece.count);
        EXPECT_EQ(profile.count_at(mid), piece.count);
        const double below = piece.eps_max * (1.0 - 1e-9);
        EXPECT_EQ(oracle::min_cube_cover(pts, below, 0.0), piece.count);
      }
    }
  }
}

TEST(CoveringProfile, CsvHasHeaderAndRows) {
  const auto csv = dr::profile_to_csv(dr::covering_profile_1d(line({-1.0, 0.0, 1.0})));
  EXPECT_EQ(csv.rfind("k,eps_min,eps_max\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(PackingNumber, GridExamples) {
  const auto g = dr::make_grid_1d(11);
  EXPECT_EQ(dr::packing_number(g, 0.19), 11u);
  EXPECT_EQ(dr::packing_number(g, 0.2), 6u);
  EXPECT_EQ(dr::packing_number(line({0.5}), 0.01), 1u);
}

TEST(CoveringBounds, OneDimensionIsExact) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = oracle::random_set(rng, 1, 10);
    for (double eps : {0.05, 0.1, 0.3, 0.7, 1.5}) {
      const auto b = dr::covering_bounds_nd(z, eps);
      EXPECT_EQ(b.m_lo, b.m_hi);
      EXPECT_EQ(b.m_lo, dr::covering_number_1d(z, eps));
    }
  }
}

TEST(CoveringBounds, PlanarGridAtSpacing) {
  const auto g = dr::make_grid_nd(2, 3);
  const auto b = dr::covering_bounds_nd(g, 1.0);
  EXPECT_EQ(b.m_lo, 4u);
  EXPECT_EQ(b.m_hi, 4u);
  EXPECT_EQ(oracle::min_cube_cover(oracle::points_of(g), 1.0), 4u);
}

TEST(CoveringBounds, DiameterScaleIsOne) {
  std::mt19937_64 rng(5);
  const auto z = oracle::random_set(rng, 3, 20);
  const auto b = dr::covering_bounds_nd(z, z.box().diameter());
  EXPECT_EQ(b.m_lo, 1u);
  EXPECT_EQ(b.m_hi, 1u);
}

TEST(CoveringBounds, EncloseBruteForce) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 1 + trial % 2;
    const auto z = oracle::random_set(rng, dim, 4 + trial % 9);
    const auto pts = oracle::points_of(z);
    for (double eps : dr::candidate_scales(z)) {
      for (double e : {eps, eps * 1.0001}) {
        const auto b = dr::covering_bounds_nd(z, e);
        const std::size_t exact = oracle::min_cube_cover(pts, e);
        EXPECT_LE(dr::packing_number(z, e), b.m_lo);
        EXPECT_LE(b.m_lo, exact);
        EXPECT_LE(exact, b.m_hi);
        EXPECT_GE(b.m_lo, 1u);
        EXPECT_LE(b.m_hi, z.size());
      }
    }
  }
}

TEST(CoveringBounds, MonotoneInEps) {
  std::mt19937_64 rng(23);
  const auto z = oracle::random_set(rng, 2, 40);
  std::size_t prev_lo = z.size(), prev_hi = z.size();
  for (double eps = 0.01; eps < 3.0; eps *= 1.1) {
    const auto b = dr::covering_bounds_nd(z, eps);
    EXPECT_LE(b.m_lo, prev_lo);
    EXPECT_LE(b.m_hi, prev_hi);
    prev_lo = b.m_lo;
    prev_hi = b.m_hi;
  }
}

TEST(CoveringNumber1d, MonotoneInSet) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto big = oracle::random_set(rng, 1, 20);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < big.size(); i += 2) keep.push_back(i);
    const auto small = big.subset(keep);
    for (double eps : {0.02, 0.1, 0.25, 0.6}) {
      EXPECT_LE(dr::covering_number_1d(small, eps), dr::covering_number_1d(big, eps));
      EXPECT_LE(dr::packing_number(small, eps), dr::packing_number(big, eps));
    }
  }
}

TEST(CandidateScales, SortedAndPositive) {
  const auto scales = dr::candidate_scales(dr::make_grid_nd(2, 4));
  ASSERT_FALSE(scales.empty());
  EXPECT_GT(scales.front(), 0.0);
  EXPECT_TRUE(std::is_sorted(scales.begin(), scales.end()));
  EXPECT_EQ(std::adjacent_find(scales.begin(), scales.end()), scales.end());
}

TEST(CoveringTable, StridedTableEnclosesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const auto z = oracle::random_set(rng, 2, 6 + trial % 6);
    const auto pts = oracle::points_of(z);
    for (std::size_t cap : {2u, 3u, 7u}) {
      const auto t = dr::covering_table(z, cap);
      ASSERT_LE(t.scales.size(), cap);
      for (double eps : dr::candidate_scales(z)) {
        for (double e : {eps * 0.9999, eps, eps * 1.0001}) {
          const auto it = std::upper_bound(t.scales.begin(), t.scales.end(), e);
          if (it == t.scales.begin()) continue;
          const auto i = static_cast<std::size_t>(it - t.scales.begin()) - 1;
          const std::size_t exact = oracle::min_cube_cover(pts, e);
          EXPECT_LE(t.m_lo[i], exact) << "cap " << cap << " eps " << e;
          EXPECT_LE(exact, t.m_hi[i]) << "cap " << cap << " eps " << e;
        }
      }
    }
  }
}

TEST(CoveringTable, FullTableMatchesPointwiseBounds) {
  std::mt19937_64 rng(37);
  const auto z = oracle::random_set(rng, 2, 10);
  const auto t = dr::covering_table(z);
  ASSERT_EQ(t.scales, dr::candidate_scales(z));
  for (std::size_t i = 0; i < t.scales.size(); ++i) {
    const auto b = dr::covering_bounds_nd(z, t.scales[i]);
    EXPECT_LE(t.m_lo[i], b.m_hi);
    EXPECT_LE(b.m_lo, t.m_hi[i]);
  }
}
