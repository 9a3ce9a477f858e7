#pragma once

#include <optional>

#include "discrete_remez/vitushkin.hpp"

namespace discrete_remez {

// Lower bounds on omega_d(Z) from user-supplied metric data (Hausdorff
// measure, covering growth and the matching injectivity radii). Nothing here
// estimates those quantities from points.

struct AnalyticBound {
  double omega_lower = 0.0;
  double eps_hat = 0.0;
};

/// Largest eps with M_d(e) <= 2 C_{n-1} (1/e)^(n-1) for all e <= eps, i.e. the
/// root of sum_{i<n-1} C_i e^(n-1-i) = C_{n-1}. Requires n >= 2. A positive
/// `cap` clamps the result.
double epsilon1(const VitushkinModel& model, double cap = 0.0);

/// Positive-measure case: s = n - 1 + sigma with sigma > 0, Hausdorff measure
/// H_s and s-injectivity radius alpha0.
struct HausdorffInput {
  double s = 0.0;
  double hausdorff = 0.0;
  double injectivity_radius = 0.0;
};
AnalyticBound hausdorff_span_bound(const VitushkinModel& model, const HausdorffInput& in);

/// Covering growth M(Z, eps) >= C_s (1/eps)^s below the covering injectivity
/// radius eps0_s. `eps2_denominator` multiplies C_{n-1} inside
/// eps'_2 = [C_s / C_{n-1}]^(1/s); the default is 1.
struct CoveringGrowthInput {
  double s = 0.0;
  double growth = 0.0;
  double injectivity_radius = 0.0;
  double eps2_denominator = 1.0;
};
AnalyticBound covering_growth_span_bound(const VitushkinModel& model, const CoveringGrowthInput& in);

/// Codimension-one case: M(Z, eps) >= C (1/eps)^(n-1) for eps <= eps0 with
/// C > C_{n-1}(n, d). Throws not-applicable otherwise.
struct HypersurfaceInput {
  double growth = 0.0;
  double injectivity_radius = 0.0;
};
AnalyticBound hypersurface_span_bound(const VitushkinModel& model, const HypersurfaceInput& in);

/// Largest eps with M_d(e) <= Q (1/e)^(n-1) for all e <= eps, with
/// Q = C_{n-1} + (C - C_{n-1}) / 2. Infinite when n = 1.
double epsilon1_prime(const VitushkinModel& model, double growth);

/// The codimension-one bound driven by an (n-1)-Hausdorff measure:
/// C = H / (2 sqrt(n^(n-1))) and eps0 = alpha0 / sqrt(n).
AnalyticBound hypersurface_measure_span_bound(const VitushkinModel& model, double hausdorff,
                                double injectivity_radius);

/// H_{n-1}(Z) above 2 sqrt(n^(n-1)) C_{n-1}(n, d) certifies d-definiteness;
/// in the plane this is a curve length above 16 sqrt(2) d.
double definite_measure_threshold(const VitushkinModel& model);

/// A C^1 hypersurface with (n-1)-area above C_{n-1}(n, d) is d-definite.
bool hypersurface_is_definite(const VitushkinModel& model, double area);

/// Span guaranteed for the dense finite subset built at eps_hat / 2 from a
/// lower bound K on the span of the full set: (1/2)^n K.
double dense_subset_span_bound(int n, double full_set_bound);

}  // namespace discrete_remez
