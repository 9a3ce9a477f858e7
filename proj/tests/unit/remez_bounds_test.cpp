#include <gtest/gtest.h>

#include <cmath>

#include <discrete_remez/error.hpp>
#include <discrete_remez/remez_bounds.hpp>

#include "../support/error_code.hpp"
#include "../support/oracles.hpp"

namespace dr = discrete_remez;
using testing_support::code_of;

TEST(RemezSpanBound, GridFactor) {
  const auto r = dr::remez_span_bound(dr::make_grid_1d(11), 3, dr::VitushkinModel::builtin(1, 3));
  EXPECT_NEAR(r.factor, 9.0, 1e-9);
  EXPECT_NEAR(r.lambda, 0.8, 1e-12);
  EXPECT_EQ(r.source, dr::BoundSource::kSpan);
  ASSERT_TRUE(r.omega_used.has_value());
  EXPECT_NEAR(*r.omega_used, 1.6, 1e-12);
  EXPECT_EQ(dr::to_string(r.source), "metric-span");
}

TEST(RemezSpanBound, UnitVolumeReading) {
  const auto z = dr::make_grid_1d(11);
  const auto r = dr::remez_span_bound(z, 3, dr::VitushkinModel::builtin(1, 3),
                                      dr::LambdaNormalization::kUnitVolume);
  EXPECT_DOUBLE_EQ(r.lambda, 1.0);
  EXPECT_DOUBLE_EQ(r.factor, 1.0);
}

TEST(RemezSpanBound, ZeroSpanNotApplicable) {
  const dr::PointSet z(dr::Box::symmetric_unit(1), std::vector<double>{-0.5, 0.5});
  EXPECT_EQ(code_of([&] { dr::remez_span_bound(z, 2, dr::VitushkinModel::builtin(1, 2)); }),
            dr::ErrorCode::kNotApplicable);
}

TEST(BrudnyiGanzburg, PlanarExample) {
  EXPECT_NEAR(dr::brudnyi_ganzburg_factor(2, 1, 0.75).factor, 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(dr::brudnyi_ganzburg_factor(3, 4, 1.0).factor, 1.0);
}

TEST(BrudnyiGanzburg, MonotoneInLambdaAndDegree) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 6; ++d) {
      double prev = std::numeric_limits<double>::infinity();
      for (double lambda = 0.05; lambda <= 1.0; lambda += 0.05) {
        const double f = dr::brudnyi_ganzburg_factor(n, d, lambda).factor;
        EXPECT_LE(f, prev);
        EXPECT_GE(f, 1.0);
        EXPECT_GE(dr::brudnyi_ganzburg_factor(n, d + 1, lambda).factor, f);
        prev = f;
      }
    }
  }
}

TEST(BrudnyiGanzburg, OneDimensionMatchesClassicalRemez) {
  for (int d = 0; d <= 8; ++d) {
    for (double mu = 0.1; mu <= 2.0; mu += 0.1) {
      const double a = dr::remez_factor_1d(mu, d).factor;
      const double b = dr::brudnyi_ganzburg_factor(1, d, mu / 2.0).factor;
      EXPECT_NEAR(a, b, 1e-9 * a);
      EXPECT_NEAR(a, oracle::chebyshev_power_form(d, (4.0 - mu) / mu), 1e-8 * a);
    }
  }
}

TEST(BrudnyiGanzburg, RejectsOutOfRangeLambda) {
  EXPECT_EQ(code_of([] { dr::brudnyi_ganzburg_factor(2, 2, 0.0); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::brudnyi_ganzburg_factor(2, 2, 1.5); }), dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::remez_factor_1d(2.5, 2); }), dr::ErrorCode::kInvalidParameter);
}

TEST(BrudnyiGanzburg, LogSpaceForHugeFactors) {
  const auto r = dr::brudnyi_ganzburg_factor(2, 5000, 1e-6);
  EXPECT_TRUE(r.log_space);
  EXPECT_TRUE(std::isinf(r.factor));
  EXPECT_TRUE(std::isfinite(r.log_factor));
  EXPECT_GT(r.log_factor, 700.0);
}

TEST(GridProductBound, PowersOfOneDimensionalFactor) {
  EXPECT_NEAR(dr::grid_product_bound(2, 11, 3).factor, 81.0, 1e-8);
  EXPECT_NEAR(dr::grid_product_bound(3, 11, 3).factor, 729.0, 1e-7);
  EXPECT_EQ(dr::grid_product_bound(2, 11, 3).source, dr::BoundSource::kGridProduct);
  EXPECT_EQ(code_of([] { dr::grid_product_bound(2, 3, 3); }), dr::ErrorCode::kNotApplicable);
}
