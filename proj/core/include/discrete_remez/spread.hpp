#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "discrete_remez/pointset.hpp"
#include "discrete_remez/vitushkin.hpp"

namespace discrete_remez {

enum class Metric { kLinf, kEuclidean };

std::string_view to_string(Metric m) noexcept;
double distance(Metric m, std::span<const double> a, std::span<const double> b);

struct TreeEdge {
  std::size_t i = 0;  ///< i < j, point indices into the input set
  std::size_t j = 0;
  double dist = 0.0;
};

struct SpanningTree {
  std::vector<TreeEdge> edges;
  Metric metric = Metric::kLinf;
};

/// Kruskal; equal lengths are taken in lexicographic (i, j) order.
SpanningTree mst(const PointSet& z, Metric metric = Metric::kLinf);

/// Sum of edge lengths to the power beta. The 1-minimal tree is minimal for
/// every beta > 0, so this is the beta-weight of the set.
double beta_weight(const SpanningTree& tree, double beta);

enum class EtaMode { kExact, kGreedy };

/// Bounds on the max-min dispersion of p points of Z.
struct EtaBounds {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;
};

/// Limits of the exact dispersion search.
inline constexpr int kEtaExactMaxP = 10;
inline constexpr std::size_t kEtaExactMaxPoints = 25;

/// Exact mode falls back to greedy past the size limits; `exact` says which ran.
EtaBounds eta(const PointSet& z, int p, EtaMode mode = EtaMode::kExact,
              Metric metric = Metric::kLinf);

enum class SpreadMode { kExact, kHeuristic };

/// Largest set for which the spread is maximized over all subsets.
inline constexpr std::size_t kSpreadExactMaxPoints = 12;

struct SpreadReport {
  double beta = 1.0;
  Metric metric = Metric::kLinf;
  double rho_full = 0.0;  ///< beta-weight of the whole set
  double v_lo = 0.0;
  double v_hi = 0.0;
  bool exact = false;
  /// Indices of the subset achieving v_lo.
  std::vector<std::size_t> best_subset;
  std::map<int, EtaBounds> eta_table;
};

/// Bounds on sup over subsets of the beta-weight. Exact mode falls back to the
/// heuristic for sets larger than kSpreadExactMaxPoints.
/// eta_table covers p = 2..p_max (0 means |Z|).
SpreadReport beta_spread(const PointSet& z, double beta, SpreadMode mode = SpreadMode::kExact,
                         Metric metric = Metric::kLinf, int p_max = 0);

struct SandwichResult {
  bool pass = false;
  double lower = 0.0;  ///< sup_p (p - 1) eta(p)^beta
  double spread = 0.0;
  double upper = 0.0;  ///< sum_j eta(j)^beta
};

/// Checks sup_p (p-1) eta(p)^beta <= V_beta <= sum_j eta(j)^beta with exact values.
/// The lower side ranges over p <= p_max (0 means |Z|); the upper sum is always complete.
SandwichResult sandwich_check(const PointSet& z, double beta, int p_max = 0,
                              Metric metric = Metric::kLinf);

/// Riemann zeta for real x > 1 with absolute error at most tol.
double zeta(double x, double tol = 1e-12);

struct PositivityVerdict {
  bool positive = false;
  double v_lo = 0.0;
  double threshold = 0.0;  ///< C'^(beta/(n-1)) zeta(beta/(n-1))
  bool exact_spread = false;
};

/// Certifies omega_d(Z) > 0 when the spread exceeds the threshold; a negative
/// answer is inconclusive.
PositivityVerdict spread_positivity_check(const PointSet& z, double beta, double cprime,
                                          Metric metric = Metric::kLinf);

/// max(0, eta^n (p - M_d(eta))) with eta the certified lower dispersion of p points.
/// `simplified` replaces M_d(eta) by C' eta^(1-n).
double dispersion_span_bound(const PointSet& z, int p, const VitushkinModel& model,
                             bool simplified = false);

}  // namespace discrete_remez
