#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <discrete_remez/error.hpp>
#include <discrete_remez/polynomial.hpp>

#include "../support/error_code.hpp"
#include "../support/oracles.hpp"

namespace dr = discrete_remez;
using testing_support::code_of;

namespace {

std::size_t position_of(const dr::ChebyshevBasis& basis, const dr::MultiIndex& a) {
  const auto& idx = basis.indices();
  return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), a) - idx.begin());
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(TotalDegreeIndices, OrderAndCount) {
  const auto idx = dr::total_degree_indices(2, 2);
  const std::vector<dr::MultiIndex> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(idx, expected);
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 6; ++d) {
      const auto all = dr::total_degree_indices(n, d);
      EXPECT_EQ(all.size(), binomial(n + d, n));
      EXPECT_EQ(dr::polynomial_space_dim(n, d), binomial(n + d, n));
      for (std::size_t i = 1; i < all.size(); ++i) {
        int a = 0, b = 0;
        for (int v : all[i - 1]) a += v;
        for (int v : all[i]) b += v;
        EXPECT_LE(a, b);
      }
    }
  }
}

TEST(Polynomial, SingleChebyshevTerm) {
  const auto box = dr::Box::symmetric_unit(1);
  std::vector<double> c(4, 0.0);
  c[3] = 1.0;
  const dr::Polynomial p(box, 3, c);
  EXPECT_NEAR(p(0.5), -1.0, 1e-14);
  EXPECT_NEAR(p(1.0), 1.0, 1e-14);
}

TEST(Polynomial, TensorProductTerm) {
  const auto box = dr::Box::symmetric_unit(2);
  dr::ChebyshevBasis basis(box, 2);
  std::vector<double> c(basis.size(), 0.0);
  c[position_of(basis, {1, 1})] = 1.0;
  const dr::Polynomial p(box, 2, c);
  const std::vector<double> x{0.5, 0.5};
  EXPECT_NEAR(p(x), 0.25, 1e-15);
  EXPECT_NEAR(dr::eval_poly(p, x), 0.25, 1e-15);
}

TEST(Polynomial, BoxIsMappedOntoReferenceCube) {
  const dr::Box box({0.0}, {2.0});
  const dr::Polynomial p(box, 1, {0.0, 1.0});
  EXPECT_NEAR(p(0.0), -1.0, 1e-15);
  EXPECT_NEAR(p(1.5), 0.5, 1e-15);
}

TEST(ChebyshevBasis, MatchesPerAxisPowerForm) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const dr::ChebyshevBasis basis(dr::Box::symmetric_unit(n), 4);
    std::vector<double> x(n), out(basis.size());
    for (int trial = 0; trial < 20; ++trial) {
      for (auto& v : x) v = u(rng);
      basis.evaluate(x, out);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        double ref = 1.0;
        for (int a = 0; a < n; ++a) ref *= oracle::chebyshev_power_form(basis.indices()[k][a], x[a]);
        EXPECT_NEAR(out[k], ref, 1e-13);
      }
    }
  }
}

TEST(ChebyshevBasis, MatrixRowsAreEvaluations) {
  std::mt19937_64 rng(67);
  const auto z = oracle::random_set(rng, 2, 9);
  const dr::ChebyshevBasis basis(z.box(), 3);
  const auto m = basis.matrix(z);
  ASSERT_EQ(m.size(), z.size() * basis.size());
  std::vector<double> row(basis.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    basis.evaluate(z.point(i), row);
    for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(m[i * basis.size() + k], row[k]);
  }
}

TEST(Polynomial, EvaluationAgreesWithBasisSum) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const dr::Box box = dr::Box::symmetric_unit(n);
    const dr::ChebyshevBasis basis(box, 5);
    std::vector<double> c(basis.size());
    for (auto& v : c) v = g(rng);
    const dr::Polynomial p(box, 5, c);
    std::vector<double> x(n), vals(basis.size());
    for (int trial = 0; trial < 20; ++trial) {
      for (auto& v : x) v = u(rng);
      basis.evaluate(x, vals);
      double ref = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) ref += c[k] * vals[k];
      EXPECT_NEAR(p(x), ref, 1e-12);
    }
  }
}

TEST(Polynomial, JsonRoundTrip) {
  const dr::Box box({-2.0, 0.0}, {1.0, 3.0});
  const dr::ChebyshevBasis basis(box, 3);
  std::vector<double> c(basis.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = 0.1 * static_cast<double>(k) - 0.3;
  const dr::Polynomial p(box, 3, c);
  const auto back = dr::Polynomial::from_json(p.to_json());
  EXPECT_EQ(back.degree(), 3);
  EXPECT_EQ(back.box(), box);
  EXPECT_EQ(back.coeffs(), c);
}

TEST(Polynomial, RejectsWrongCoefficientCount) {
  EXPECT_EQ(code_of([] { dr::Polynomial(dr::Box::symmetric_unit(1), 2, {1.0, 2.0}); }),
            dr::ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { dr::Polynomial::from_json("[1,2"); }), dr::ErrorCode::kParseError);
}

TEST(Polynomial, ConstantEverywhere) {
  const auto p = dr::Polynomial::constant(dr::Box::symmetric_unit(2), 2.5);
  EXPECT_EQ(p.degree(), 0);
  EXPECT_DOUBLE_EQ(p(std::vector<double>{0.3, -0.9}), 2.5);
}
