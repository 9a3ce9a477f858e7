#include "discrete_remez/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

const char* to_string(LpStatus s) noexcept {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

// Columns 0..n-1 are the structural variables, n..n+m-1 the artificials.
// Row m holds reduced costs; the last column holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), width_(n + m + 1), t_((m + 1) * width_, 0.0), basis_(m) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  double& rhs(std::size_t i) { return at(i, width_ - 1); }
  double& cost(std::size_t j) { return at(m_, j); }
  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t total() const { return n_ + m_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    double* prow = &t_[r * width_];
    for (std::size_t j = 0; j < width_; ++j) prow[j] /= p;
    prow[c] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* row = &t_[i * width_];
      const double f = row[c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Rebuilds the cost row from column costs so that basic columns read zero.
  void price(std::span<const double> col_cost) {
    for (std::size_t j = 0; j + 1 < width_; ++j) cost(j) = col_cost[j];
    at(m_, width_ - 1) = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = col_cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(m_, j) -= cb * at(i, j);
    }
  }

  // Runs simplex iterations with entering candidates restricted to [0, limit).
  LpStatus iterate(std::size_t limit, const LpOptions& opts, std::size_t& iterations) {
    std::size_t stalled = 0;
    while (true) {
      if (iterations >= opts.max_iterations) return LpStatus::kIterationLimit;
      const bool bland = stalled >= opts.degenerate_switch;
      std::size_t enter = limit;
      double most = -opts.cost_tol;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost(j) < most) {
          enter = j;
          if (bland) break;
          most = cost(j);
        }
      }
      if (enter == limit) return LpStatus::kOptimal;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a <= opts.pivot_tol) continue;
        const double ratio = std::max(0.0, rhs(i)) / a;
        const double tie = 1e-12 * (1.0 + std::abs(best));
        if (leave == m_ || ratio < best - tie) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + tie && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) return LpStatus::kUnbounded;
      stalled = best > 0.0 ? 0 : stalled + 1;
      pivot(leave, enter);
      ++iterations;
    }
  }

  // Pivots the given columns into the basis, one per row, choosing the row
  // with the largest available pivot. False if the columns are singular.
  bool crash(std::span<const std::size_t> cols, double tol) {
    std::vector<char> taken(m_, 0);
    for (std::size_t c : cols) {
      std::size_t row = m_;
      double mag = tol;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!taken[i] && std::abs(at(i, c)) > mag) {
          mag = std::abs(at(i, c));
          row = i;
        }
      }
      if (row == m_) return false;
      pivot(row, c);
      taken[row] = 1;
    }
    return true;
  }

 private:
  std::size_t m_, n_, width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_standard_form(const DenseMatrix& a, std::span<const double> b,
                               std::span<const double> c, const LpOptions& opts,
                               std::span<const std::size_t> start) {
  const std::size_t m = a.rows, n = a.cols;
  require(b.size() == m && c.size() == n, ErrorCode::kInvalidParameter,
          fmt::format("LP shape mismatch: A is {}x{}, b has {}, c has {}", m, n, b.size(), c.size()));
  require(start.empty() || start.size() == m, ErrorCode::kInvalidParameter,
          "starting basis needs one column per row");
  std::vector<double> sign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
  auto fresh = [&] {
    Tableau t(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign[i] * a(i, j);
      t.at(i, n + i) = 1.0;
      t.rhs(i) = sign[i] * b[i];
      t.basis()[i] = n + i;
    }
    return t;
  };
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(b[i]));

  LpSolution sol;
  Tableau t = fresh();
  bool warm = false;
  if (!start.empty() && t.crash(start, opts.pivot_tol)) {
    warm = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.rhs(i) < -1e-12 * scale) warm = false;
    }
  }
  if (!warm) {
    t = fresh();
    std::vector<double> phase1(n + m, 0.0);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1.0;
    t.price(phase1);
    const LpStatus st = t.iterate(n, opts, sol.iterations);
    if (st == LpStatus::kIterationLimit) {
      sol.status = st;
      return sol;
    }
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] >= n) infeas += t.rhs(i);
    }
    if (infeas > 1e-9 * scale) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where a structural pivot
    // exists; rows with none are redundant and keep their artificial at zero.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < n) continue;
      std::size_t best = n;
      double mag = opts.pivot_tol;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(t.at(i, j)) > mag) {
          mag = std::abs(t.at(i, j));
          best = j;
        }
      }
      if (best < n) t.pivot(i, best);
    }
  }

  std::vector<double> phase2(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.price(phase2);
  const LpStatus st = t.iterate(n, opts, sol.iterations);
  sol.status = st;
  if (st != LpStatus::kOptimal) return sol;

  sol.basis = t.basis();
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < n) sol.x[t.basis()[i]] = std::max(0.0, t.rhs(i));
  }
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
  // Artificial columns started as the identity with zero phase-2 cost, so
  // their reduced costs are the negated multipliers of the sign-flipped rows.
  sol.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) sol.duals[i] = -sign[i] * t.cost(n + i);
  return sol;
}

}  // namespace discrete_remez
