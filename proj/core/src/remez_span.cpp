#include "discrete_remez/remez_span.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "discrete_remez/error.hpp"
#include "discrete_remez/simplex.hpp"
#include "parallel.hpp"

namespace discrete_remez {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kConditioningWarning = 1e-7;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Dual program: min sum(u + v) s.t. M^T (u - v) = B(x*), u, v >= 0.
// The equality multipliers are the coefficients of the primal polynomial.
// A well-conditioned square subsystem, chosen once per set, supplies a
// feasible starting basis for every probe. The optimal basis is then solved
// again with residuals in extended precision, which keeps full accuracy on
// sets whose point functionals are nearly dependent.
class DualProgram {
 public:
  DualProgram(const ChebyshevBasis& basis, const PointSet& z)
      : m_(basis.matrix(z)), rows_(z.size()), cols_(basis.size()), a_(cols_, 2 * rows_),
        wide_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      basis.evaluate_extended(z.point(i), std::span<long double>(wide_.data() + i * cols_, cols_));
      for (std::size_t j = 0; j < cols_; ++j) {
        const double v = m_[i * cols_ + j];
        a_(j, i) = v;
        a_(j, rows_ + i) = -v;
      }
    }
    const Eigen::Map<const RowMatrix> mat(m_.data(), static_cast<Eigen::Index>(rows_),
                                          static_cast<Eigen::Index>(cols_));
    const RowMatrix mt = mat.transpose();
    Eigen::ColPivHouseholderQR<RowMatrix> qr(mt);
    if (static_cast<std::size_t>(qr.rank()) == cols_) {
      const auto& perm = qr.colsPermutation().indices();
      RowMatrix square(static_cast<Eigen::Index>(cols_), static_cast<Eigen::Index>(cols_));
      for (std::size_t k = 0; k < cols_; ++k) {
        support_.push_back(static_cast<std::size_t>(perm(static_cast<Eigen::Index>(k))));
        square.col(static_cast<Eigen::Index>(k)) = mt.col(perm(static_cast<Eigen::Index>(k)));
      }
      lu_.compute(square);
    }
  }

  LpValue solve(const ChebyshevBasis& basis, std::span<const double> xstar) const {
    std::vector<double> target(cols_);
    basis.evaluate(xstar, target);
    std::vector<std::size_t> start;
    if (!support_.empty()) {
      const Eigen::Map<const Eigen::VectorXd> rhs(target.data(), static_cast<Eigen::Index>(cols_));
      const Eigen::VectorXd w = lu_.solve(rhs);
      for (std::size_t k = 0; k < cols_; ++k) {
        start.push_back(w(static_cast<Eigen::Index>(k)) >= 0.0 ? support_[k] : rows_ + support_[k]);
      }
    }
    const std::vector<double> cost(2 * rows_, 1.0);
    const LpSolution sol = solve_standard_form(a_, target, cost, {}, start);
    if (sol.status == LpStatus::kInfeasible) {
      fail(ErrorCode::kIndefiniteSet, "evaluation functional is not in the span of the point functionals");
    }
    require(sol.status == LpStatus::kOptimal, ErrorCode::kIndefiniteSet,
            fmt::format("linear program ended as {}", to_string(sol.status)));

    std::vector<long double> wide_target(cols_);
    basis.evaluate_extended(xstar, wide_target);
    LpValue out;
    out.iterations = sol.iterations;
    if (!refine(sol.basis, wide_target, out)) {
      out.coeffs = sol.duals;
      out.l1_norm = sol.objective;
    }
    // Rescale so the returned polynomial is feasible, not just feasible up to roundoff.
    long double worst = 0.0L;
    for (std::size_t i = 0; i < rows_; ++i) {
      long double s = 0.0L;
      for (std::size_t j = 0; j < cols_; ++j) s += wide_[i * cols_ + j] * out.coeffs[j];
      worst = std::max(worst, std::abs(s));
    }
    long double value = 0.0L;
    for (std::size_t j = 0; j < cols_; ++j) value += out.coeffs[j] * wide_target[j];
    if (worst > 1.0L) {
      value /= worst;
      for (auto& c : out.coeffs) c = static_cast<double>(c / worst);
    }
    out.value = static_cast<double>(value);
    out.duality_gap = std::abs(out.l1_norm - out.value);
    return out;
  }

 private:
  using WideMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using WideVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  // Solves the square system of the optimal basis for both the primal
  // coefficients and the l1 representation. False when the basis still holds
  // an artificial column or the refinement does not settle.
  bool refine(const std::vector<std::size_t>& cols, const std::vector<long double>& target,
              LpValue& out) const {
    const auto k = static_cast<Eigen::Index>(cols_);
    WideMatrix wide(k, k);
    Eigen::VectorXd sign(k);
    for (Eigen::Index r = 0; r < k; ++r) {
      const std::size_t col = cols[static_cast<std::size_t>(r)];
      if (col >= 2 * rows_) return false;
      const std::size_t point = col % rows_;
      sign(r) = col < rows_ ? 1.0 : -1.0;
      for (Eigen::Index j = 0; j < k; ++j) wide(r, j) = wide_[point * cols_ + static_cast<std::size_t>(j)];
    }
    const Eigen::MatrixXd narrow = wide.cast<double>();
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(narrow);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lut(narrow.transpose());
    auto iterate = [](const Eigen::PartialPivLU<Eigen::MatrixXd>& f, const WideMatrix& a,
                      const WideVector& rhs, WideVector& x) {
      x = f.solve(rhs.cast<double>()).cast<long double>();
      for (int step = 0; step < 4; ++step) {
        const WideVector r = rhs - a * x;
        x += f.solve(r.cast<double>()).cast<long double>();
      }
      return x.allFinite();
    };
    // Primal: the polynomial takes the value sign_r at the r-th basic point.
    WideVector coeffs, weights;
    if (!iterate(lu, wide, sign.cast<long double>(), coeffs)) return false;
    // Dual: B(x*) as a combination of the basic point functionals.
    const WideVector rhs = Eigen::Map<const WideVector>(target.data(), k);
    if (!iterate(lut, wide.transpose(), rhs, weights)) return false;
    out.coeffs.resize(cols_);
    for (Eigen::Index j = 0; j < k; ++j) out.coeffs[static_cast<std::size_t>(j)] = static_cast<double>(coeffs(j));
    out.l1_norm = static_cast<double>(weights.cwiseAbs().sum());
    return true;
  }

  std::vector<double> m_;
  std::size_t rows_, cols_;
  DenseMatrix a_;
  std::vector<long double> wide_;
  std::vector<std::size_t> support_;
  Eigen::PartialPivLU<RowMatrix> lu_;
};

void check_degree(int d) {
  require(d >= 0, ErrorCode::kInvalidParameter, fmt::format("degree must be >= 0, got {}", d));
}

int resolve_resolution(std::size_t dim, int resolution) {
  if (resolution == 0) return default_resolution(dim);
  require(resolution >= 2, ErrorCode::kInvalidParameter,
          fmt::format("probe resolution must be >= 2, got {}", resolution));
  return resolution;
}

}  // namespace

DefinitenessReport definiteness(const PointSet& z, int d, double tol) {
  check_degree(d);
  DefinitenessReport r;
  r.required = polynomial_space_dim(static_cast<int>(z.dim()), d);
  if (z.size() < r.required) {
    r.rank = z.size();
    return r;
  }
  const ChebyshevBasis basis(z.box(), d);
  const std::vector<double> m = basis.matrix(z);
  const Eigen::Map<const RowMatrix> mat(m.data(), static_cast<Eigen::Index>(z.size()),
                                        static_cast<Eigen::Index>(basis.size()));
  Eigen::ColPivHouseholderQR<RowMatrix> qr(mat);
  qr.setThreshold(tol);
  r.rank = static_cast<std::size_t>(qr.rank());
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  const double largest = diag.size() > 0 ? diag(0) : 0.0;
  const double smallest = diag.size() > 0 ? diag(diag.size() - 1) : 0.0;
  r.conditioning = largest > 0.0 ? smallest / largest : 0.0;
  if (z.dim() == 1) {
    // Distinct points on a line: a nonzero polynomial of degree d has at most
    // d roots, so the numerical rank only measures conditioning here.
    r.rank = r.required;
  }
  r.definite = r.rank == r.required;
  return r;
}

bool is_d_definite(const PointSet& z, int d, double tol) { return definiteness(z, d, tol).definite; }

LpValue lp_value_at(const PointSet& z, int d, std::span<const double> xstar) {
  check_degree(d);
  const ChebyshevBasis basis(z.box(), d);
  const DualProgram program(basis, z);
  LpValue v = program.solve(basis, xstar);
  if (v.value < 1.0) {
    // Constant 1 is feasible, so the optimum is at least 1.
    v.coeffs.assign(basis.size(), 0.0);
    v.coeffs[0] = 1.0;
    v.value = 1.0;
    v.duality_gap = std::abs(v.l1_norm - 1.0);
  }
  return v;
}

std::vector<double> probe_nodes(double lo, double hi, int resolution) {
  require(resolution >= 2, ErrorCode::kInvalidParameter, "probe resolution must be >= 2");
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  std::vector<double> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(resolution));
  const int last = resolution - 1;
  for (int k = 0; k <= last; ++k) {
    // Written to be exactly symmetric and exact at 0 for odd resolutions.
    const double t = (2 * k == last) ? 0.0 : std::cos(std::numbers::pi * (last - k) / last);
    nodes.push_back(mid + half * t);
    nodes.push_back(lo + (hi - lo) * k / last);
  }
  nodes.push_back(lo);
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  const double tol = 1e-14 * (hi - lo);
  std::vector<double> out;
  for (double x : nodes) {
    x = std::clamp(x, lo, hi);
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  out.back() = hi;
  return out;
}

std::vector<double> probe_grid(const Box& box, int resolution) {
  const std::size_t n = box.dim();
  std::vector<std::vector<double>> axes(n);
  std::size_t total = 1;
  for (std::size_t a = 0; a < n; ++a) {
    axes[a] = probe_nodes(box.lo()[a], box.hi()[a], resolution);
    total *= axes[a].size();
  }
  std::vector<double> out(total * n);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t a = 0; a < n; ++a) out[p * n + a] = axes[a][idx[a]];
    for (std::size_t a = n; a-- > 0;) {
      if (++idx[a] < axes[a].size()) break;
      idx[a] = 0;
    }
  }
  return out;
}

int default_resolution(std::size_t dim) {
  if (dim <= 1) return 513;
  if (dim == 2) return 65;
  return 17;
}

RemezEstimate exact_remez_span(const PointSet& z, int d, int resolution, unsigned threads) {
  check_degree(d);
  const DefinitenessReport def = definiteness(z, d);
  if (!def.definite) {
    fail(ErrorCode::kNotApplicable,
         fmt::format("set is not {}-definite: rank {} of {} (conditioning {:.3g}, {} points)", d,
                     def.rank, def.required, def.conditioning, z.size()));
  }
  resolution = resolve_resolution(z.dim(), resolution);
  const std::size_t n = z.dim();
  const ChebyshevBasis basis(z.box(), d);
  const DualProgram program(basis, z);
  const std::vector<double> grid = probe_grid(z.box(), resolution);
  const std::size_t probes = grid.size() / n;

  std::vector<double> values(probes, 1.0), gaps(probes, 0.0);
  detail::parallel_for(probes, threads, [&](std::size_t p) {
    const LpValue v = program.solve(basis, std::span<const double>(grid.data() + p * n, n));
    values[p] = v.value;
    gaps[p] = v.duality_gap;
  });

  std::size_t best = 0;
  for (std::size_t p = 1; p < probes; ++p) {
    if (values[p] > values[best]) best = p;
  }
  RemezEstimate est;
  est.probe.assign(grid.begin() + static_cast<std::ptrdiff_t>(best * n),
                   grid.begin() + static_cast<std::ptrdiff_t>((best + 1) * n));
  const LpValue top = lp_value_at(z, d, est.probe);
  est.value = top.value;
  est.probe_index = best;
  est.witness = Polynomial(z.box(), d, top.coeffs);
  est.resolution = resolution;
  est.probe_count = probes;
  est.definite = true;
  est.conditioning = def.conditioning;
  est.ill_conditioned = def.conditioning < kConditioningWarning;
  est.max_duality_gap = *std::max_element(gaps.begin(), gaps.end());
  return est;
}

double lebesgue_oracle(const PointSet& z, int d, int resolution) {
  check_degree(d);
  require(z.dim() == 1, ErrorCode::kInvalidParameter, "Lebesgue oracle is one-dimensional");
  require(z.size() == static_cast<std::size_t>(d) + 1, ErrorCode::kInvalidParameter,
          fmt::format("Lebesgue oracle needs exactly {} points, got {}", d + 1, z.size()));
  resolution = resolve_resolution(1, resolution);
  const auto& x = z.coords();
  const std::vector<double> nodes = probe_nodes(z.box().lo()[0], z.box().hi()[0], resolution);
  double best = 0.0;
  for (double t : nodes) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double l = 1.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != i) l *= (t - x[j]) / (x[i] - x[j]);
      }
      sum += std::abs(l);
    }
    best = std::max(best, sum);
  }
  return best;
}

FalsifyReport falsify(const PointSet& z, int d, double bound, std::size_t trials,
                      std::uint64_t seed, int resolution, unsigned threads) {
  check_degree(d);
  const DefinitenessReport def = definiteness(z, d);
  require(def.definite, ErrorCode::kNotApplicable,
          fmt::format("falsifier needs a {}-definite set (rank {} of {})", d, def.rank, def.required));
  resolution = resolve_resolution(z.dim(), resolution);
  const std::size_t n = z.dim();
  const ChebyshevBasis basis(z.box(), d);
  const std::size_t dim = basis.size();
  const std::vector<double> mz_data = basis.matrix(z);
  const std::vector<double> grid = probe_grid(z.box(), resolution);
  const std::vector<double> mp_data = basis.matrix(grid);
  const std::size_t probes = grid.size() / n;
  const Eigen::Map<const RowMatrix> mz(mz_data.data(), static_cast<Eigen::Index>(z.size()),
                                       static_cast<Eigen::Index>(dim));
  const Eigen::Map<const RowMatrix> mp(mp_data.data(), static_cast<Eigen::Index>(probes),
                                       static_cast<Eigen::Index>(dim));

  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (trials + kBlock - 1) / kBlock;
  struct BlockResult {
    double max_ratio = 0.0;
    std::size_t worst = 0;
    std::size_t violations = 0;
    std::optional<std::size_t> first;
  };
  std::vector<BlockResult> results(blocks);
  const double limit = bound + 1e-6;

  auto coefficients = [&](std::size_t trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd c(static_cast<Eigen::Index>(dim));
    for (Eigen::Index j = 0; j < c.size(); ++j) c(j) = normal(rng);
    return c;
  };

  detail::parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t first = b * kBlock;
    const std::size_t count = std::min(kBlock, trials - first);
    Eigen::MatrixXd c(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(count));
    for (std::size_t t = 0; t < count; ++t) c.col(static_cast<Eigen::Index>(t)) = coefficients(first + t);
    const Eigen::MatrixXd on_z = mz * c;
    const Eigen::MatrixXd on_grid = mp * c;
    BlockResult& r = results[b];
    for (std::size_t t = 0; t < count; ++t) {
      const auto col = static_cast<Eigen::Index>(t);
      const double zmax = on_z.col(col).cwiseAbs().maxCoeff();
      if (!(zmax > 0.0)) continue;
      const double ratio = on_grid.col(col).cwiseAbs().maxCoeff() / zmax;
      if (ratio > r.max_ratio) {
        r.max_ratio = ratio;
        r.worst = first + t;
      }
      if (ratio > limit) {
        ++r.violations;
        if (!r.first) r.first = first + t;
      }
    }
  });

  FalsifyReport rep;
  rep.trials = trials;
  rep.bound = bound;
  rep.seed = seed;
  rep.resolution = resolution;
  for (const auto& r : results) {
    if (r.max_ratio > rep.max_ratio) {
      rep.max_ratio = r.max_ratio;
      rep.worst_trial = r.worst;
    }
    rep.violations += r.violations;
    if (r.first && !rep.first_violation) rep.first_violation = r.first;
  }
  if (trials > 0) {
    const Eigen::VectorXd c = coefficients(rep.worst_trial);
    const Eigen::VectorXd on_z = mz * c;
    const Eigen::VectorXd on_grid = mp * c;
    const double zmax = on_z.cwiseAbs().maxCoeff();
    rep.worst_coeffs.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) rep.worst_coeffs[j] = c(static_cast<Eigen::Index>(j)) / zmax;
    Eigen::Index at = 0;
    on_grid.cwiseAbs().maxCoeff(&at);
    rep.worst_probe.assign(grid.begin() + at * static_cast<Eigen::Index>(n),
                           grid.begin() + (at + 1) * static_cast<Eigen::Index>(n));
  }
  return rep;
}

void require_no_violation(const FalsifyReport& report) {
  if (report.violations == 0) return;
  fail(ErrorCode::kFalsificationFound,
       fmt::format("{} of {} trials exceed bound {:.17g}; first violating trial {}, worst trial {} "
                   "with ratio {:.17g}, seed {}, resolution {}",
                   report.violations, report.trials, report.bound, *report.first_violation,
                   report.worst_trial, report.max_ratio, report.seed, report.resolution));
}

}  // namespace discrete_remez
