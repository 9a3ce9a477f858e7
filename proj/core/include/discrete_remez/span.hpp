#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discrete_remez/covering.hpp"
#include "discrete_remez/pointset.hpp"
#include "discrete_remez/vitushkin.hpp"

namespace discrete_remez {

enum class SpanMode { kExact, kInterval };

/// Metric d-span omega_d(Z) = sup_eps eps^n (M(eps, Z) - M_d(eps)).
///
/// In exact mode omega_lo == omega_hi. `attained` is false when the supremum
/// is a left limit at a breakpoint of the covering count, which is the usual
/// case: the count drops exactly where eps^n (k - M_d) would peak.
struct SpanResult {
  SpanMode mode = SpanMode::kExact;
  double omega_lo = 0.0;
  double omega_hi = 0.0;
  double witness_eps = 0.0;
  bool attained = true;
};

/// Exact span of a one-dimensional set from its covering profile.
SpanResult omega_1d(const PointSet& z, int d);

/// Certified enclosure from the packing (lower) and greedy cover (upper)
/// counts. Delegates to omega_1d when dim == 1.
SpanResult omega_nd(const PointSet& z, int d, const VitushkinModel& model);

struct PositivityWitness {
  bool positive = false;
  double eps = 0.0;
  std::size_t count = 0;  // certified lower bound on M(eps, Z)
  double vitushkin = 0.0;  // M_d(eps)
};

/// True iff some eps has m_lo(eps) > M_d(eps); the witness satisfies it strictly.
PositivityWitness omega_positive(const PointSet& z, int d, const VitushkinModel& model);

/// max(0, eps0^n (|Z| - M_d(eps0))) with eps0 the minimal pairwise distance.
double omega_min_distance_bound(const PointSet& z, int d, const VitushkinModel& model);

/// Plot data for eps -> eps^n (M(eps) - M_d(eps)), sampled at the start of
/// every constant piece and as the left limit at its end.
struct CurveSample {
  double eps = 0.0;
  bool left_limit = false;
  std::size_t m_lo = 0;
  std::size_t m_hi = 0;
  double vitushkin = 0.0;
  double value_lo = 0.0;
  double value_hi = 0.0;
};
std::vector<CurveSample> span_curve(const PointSet& z, const VitushkinModel& model);
std::string curve_to_csv(const std::vector<CurveSample>& curve);

}  // namespace discrete_remez
