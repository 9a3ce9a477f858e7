#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <discrete_remez/error.hpp>
#include <discrete_remez/remez_span.hpp>

#include "../support/error_code.hpp"
#include "../support/oracles.hpp"

namespace dr = discrete_remez;
using testing_support::code_of;

namespace {

dr::PointSet line(std::vector<double> xs) {
  return dr::PointSet(dr::Box::symmetric_unit(1), xs);
}

std::vector<double> sorted_nodes(std::mt19937_64& rng, std::size_t count) {
  const auto z = oracle::random_set(rng, 1, count);
  auto pts = oracle::points_of(z);
  std::vector<double> xs;
  for (const auto& p : pts) xs.push_back(p[0]);
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST(RemezSpan, ThreePointQuadratic) {
  const auto r = dr::exact_remez_span(line({-1.0, 0.0, 1.0}), 2);
  EXPECT_NEAR(r.value, 1.25, 1e-10);
  ASSERT_EQ(r.probe.size(), 1u);
  EXPECT_NEAR(std::abs(r.probe[0]), 0.5, 1e-12);
  EXPECT_TRUE(r.definite);
  EXPECT_LT(r.max_duality_gap, 1e-9);
}

TEST(RemezSpan, ValueAtMemberIsOne) {
  const auto z = line({-0.8, -0.1, 0.3, 0.9});
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_NEAR(dr::lp_value_at(z, 2, z.point(i)).value, 1.0, 1e-10);
  }
}

TEST(RemezSpan, InterpolationNodesGiveLebesgueConstant) {
  std::mt19937_64 rng(83);
  for (int d = 1; d <= 5; ++d) {
    const auto xs = sorted_nodes(rng, static_cast<std::size_t>(d) + 1);
    const auto z = line(xs);
    const auto r = dr::exact_remez_span(z, d, 129);
    double ref = 0.0;
    for (double x : dr::probe_nodes(-1.0, 1.0, 129)) ref = std::max(ref, oracle::lebesgue_function(xs, x));
    EXPECT_NEAR(r.value, ref, 1e-8 * ref) << d;
    EXPECT_NEAR(dr::lebesgue_oracle(z, d, 129), ref, 1e-8 * ref) << d;
  }
}

TEST(RemezSpan, LpValueMatchesVertexEnumeration) {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 1 + trial % 3;
    const auto xs = sorted_nodes(rng, static_cast<std::size_t>(d) + 2 + trial % 3);
    const auto z = line(xs);
    for (int k = 0; k < 3; ++k) {
      const double x = u(rng);
      const double expected = std::max(1.0, oracle::lp_by_vertices(xs, d, x));
      const std::vector<double> probe{x};
      EXPECT_NEAR(dr::lp_value_at(z, d, probe).value, expected, 1e-8 * expected);
    }
  }
}

TEST(RemezSpan, WitnessIsFeasibleAndAttainsValue) {
  std::mt19937_64 rng(97);
  for (std::size_t dim = 1; dim <= 2; ++dim) {
    const auto z = oracle::random_set(rng, dim, dim == 1 ? 9 : 20);
    const int d = 2;
    const auto r = dr::exact_remez_span(z, d, dim == 1 ? 257 : 33);
    for (std::size_t i = 0; i < z.size(); ++i) EXPECT_LE(std::abs(r.witness(z.point(i))), 1.0 + 1e-9);
    EXPECT_NEAR(std::abs(r.witness(r.probe)), r.value, 1e-8 * r.value);
    EXPECT_GE(r.value, 1.0);
  }
}

TEST(RemezSpan, NonIncreasingUnderSupersets) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    const auto big = oracle::random_set(rng, 1, 16);
    std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5, 6};
    const auto small = big.subset(keep);
    EXPECT_GE(dr::exact_remez_span(small, 3, 129).value + 1e-9, dr::exact_remez_span(big, 3, 129).value);
  }
}

TEST(RemezSpan, ProbeNodesIncludeEndpointsAndMidpoint) {
  const auto nodes = dr::probe_nodes(-1.0, 1.0, 5);
  EXPECT_TRUE(std::is_sorted(nodes.begin(), nodes.end()));
  EXPECT_DOUBLE_EQ(nodes.front(), -1.0);
  EXPECT_DOUBLE_EQ(nodes.back(), 1.0);
  EXPECT_NE(std::find_if(nodes.begin(), nodes.end(), [](double v) { return std::abs(v - 0.5) < 1e-15; }),
            nodes.end());
  EXPECT_EQ(dr::probe_grid(dr::Box::symmetric_unit(2), 5).size(), 2 * nodes.size() * nodes.size());
}

TEST(Definiteness, Examples) {
  const auto grid = dr::make_grid_nd(2, 3);
  EXPECT_TRUE(dr::is_d_definite(grid, 2));
  EXPECT_FALSE(dr::is_d_definite(grid, 3));
  const auto report = dr::definiteness(grid, 3);
  EXPECT_EQ(report.required, 10u);
  EXPECT_EQ(report.rank, 9u);
  const dr::PointSet collinear(dr::Box::symmetric_unit(2), {{-0.5, -0.5}, {0.0, 0.0}, {0.5, 0.5}, {0.9, 0.9}});
  EXPECT_FALSE(dr::is_d_definite(collinear, 1));
  EXPECT_TRUE(dr::is_d_definite(line({-0.5, 0.0, 0.5}), 2));
  EXPECT_FALSE(dr::is_d_definite(line({-0.5, 0.0, 0.5}), 3));
}

TEST(Definiteness, IndefiniteSetIsNotApplicable) {
  EXPECT_EQ(code_of([] { dr::exact_remez_span(dr::make_grid_nd(2, 3), 3, 9); }),
            dr::ErrorCode::kNotApplicable);
}

TEST(Falsify, ExactValueSurvives) {
  const auto z = dr::make_grid_1d(11);
  const auto exact = dr::exact_remez_span(z, 3);
  const auto rep = dr::falsify(z, 3, exact.value, 2000, 5, 0, 1);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_LE(rep.max_ratio, exact.value + 1e-9);
  EXPECT_NO_THROW(dr::require_no_violation(rep));
}

TEST(Falsify, UnderstatedBoundIsCaught) {
  const auto z = line({-1.0, 0.0, 1.0});
  const auto rep = dr::falsify(z, 2, 1.0, 2000, 9, 0, 1);
  EXPECT_GT(rep.violations, 0u);
  ASSERT_TRUE(rep.first_violation.has_value());
  EXPECT_GT(rep.max_ratio, 1.0);
  EXPECT_EQ(code_of([&] { dr::require_no_violation(rep); }), dr::ErrorCode::kFalsificationFound);
}

TEST(Falsify, DeterministicForSeed) {
  const auto z = dr::make_grid_1d(7);
  const auto a = dr::falsify(z, 2, 10.0, 600, 123, 65, 1);
  const auto b = dr::falsify(z, 2, 10.0, 600, 123, 65, 2);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  EXPECT_EQ(a.worst_trial, b.worst_trial);
}
