#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace discrete_remez {

/// Dense row-major matrix; just enough structure for the LP code.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(LpStatus s) noexcept;

struct LpOptions {
  double pivot_tol = 1e-11;
  double cost_tol = 1e-11;
  std::size_t max_iterations = 100000;
  /// Consecutive degenerate pivots after which pricing switches from the most
  /// negative reduced cost to Bland's lowest-index rule.
  std::size_t degenerate_switch = 20;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  /// Multipliers y of the equality rows: A^T y <= c, with equality on the basis.
  std::vector<double> duals;
  /// Basic column of each row at termination; values >= A.cols are artificials.
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
};

/// min c^T x subject to A x = b, x >= 0.
///
/// Tableau simplex. `start`, when given, lists one column per row forming a
/// primal feasible basis and phase one is skipped; otherwise (or if that basis
/// turns out singular or infeasible) artificial variables provide the start.
/// Ties in the ratio test go to the lowest basic index, and pricing falls back
/// to Bland's rule on degenerate stalls, so the method cannot cycle.
LpSolution solve_standard_form(const DenseMatrix& a, std::span<const double> b,
                               std::span<const double> c, const LpOptions& opts = {},
                               std::span<const std::size_t> start = {});

}  // namespace discrete_remez
