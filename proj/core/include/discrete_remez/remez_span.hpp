#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "discrete_remez/pointset.hpp"
#include "discrete_remez/polynomial.hpp"

namespace discrete_remez {

struct DefinitenessReport {
  bool definite = false;
  std::size_t rank = 0;
  std::size_t required = 0;  ///< C(n + d, n)
  /// Smallest retained |R_ii| over the largest, from pivoted QR.
  double conditioning = 0.0;
};

DefinitenessReport definiteness(const PointSet& z, int d, double tol = 1e-9);
bool is_d_definite(const PointSet& z, int d, double tol = 1e-9);

struct LpValue {
  double value = 1.0;
  /// Coefficients of an optimal polynomial in the basis order of ChebyshevBasis.
  std::vector<double> coeffs;
  /// Objective of the minimal l1 representation; equals value at optimum.
  double l1_norm = 1.0;
  double duality_gap = 0.0;
  std::size_t iterations = 0;
};

/// max P(x*) over degree-d P with |P| <= 1 on Z.
LpValue lp_value_at(const PointSet& z, int d, std::span<const double> xstar);

/// Per-axis probe nodes at a given resolution: the Chebyshev-Lobatto nodes
/// merged with the equispaced nodes, both including the endpoints.
std::vector<double> probe_nodes(double lo, double hi, int resolution);

/// Row-major coordinates of the tensor probe grid over the box.
std::vector<double> probe_grid(const Box& box, int resolution);

int default_resolution(std::size_t dim);

struct RemezEstimate {
  double value = 1.0;
  std::vector<double> probe;
  std::size_t probe_index = 0;
  Polynomial witness = Polynomial::constant(Box::symmetric_unit(1), 1.0);
  int resolution = 0;
  std::size_t probe_count = 0;
  bool definite = true;
  double conditioning = 1.0;
  bool ill_conditioned = false;
  double max_duality_gap = 0.0;
};

/// Lower bound on the Remez d-span: max of lp_value_at over the probe grid.
RemezEstimate exact_remez_span(const PointSet& z, int d, int resolution = 0, unsigned threads = 0);

/// Max over the probe grid of the Lebesgue function of d+1 points in 1D.
double lebesgue_oracle(const PointSet& z, int d, int resolution = 0);

struct FalsifyReport {
  std::size_t trials = 0;
  double bound = 0.0;
  double max_ratio = 0.0;
  std::size_t worst_trial = 0;
  std::size_t violations = 0;
  std::uint64_t seed = 0;
  int resolution = 0;
  /// Coefficients of the worst trial normalized to sup 1 on Z.
  std::vector<double> worst_coeffs;
  std::vector<double> worst_probe;
  std::optional<std::size_t> first_violation;
};

/// Random-polynomial search for a ratio max_grid|P| / max_Z|P| above bound + 1e-6.
FalsifyReport falsify(const PointSet& z, int d, double bound, std::size_t trials,
                      std::uint64_t seed, int resolution = 0, unsigned threads = 0);

/// Throws falsification-found with reproduction data when the report has violations.
void require_no_violation(const FalsifyReport& report);

}  // namespace discrete_remez
