#pragma once

#include <optional>
#include <string>

#include "discrete_remez/pointset.hpp"
#include "discrete_remez/span.hpp"
#include "discrete_remez/vitushkin.hpp"

namespace discrete_remez {

enum class BoundSource {
  kClassical,        // T_d((4 - mu) / mu) on [-1, 1]
  kBrudnyiGanzburg,  // measure ratio lambda in a convex body
  kSpan,             // omega_d(Z) in place of the measure
  kGridProduct,      // one-dimensional grid bound raised to the n-th power
};

std::string_view to_string(BoundSource source) noexcept;

/// A Chebyshev-type bound sup_box |P| <= factor * sup_Z |P|.
///
/// When d * arccosh(x) exceeds 700 the factor itself is not representable;
/// `log_space` is then set, `factor` is +inf and `log_factor` is exact.
struct BoundReport {
  int n = 1;
  int d = 0;
  double lambda = 1.0;
  double factor = 1.0;
  double log_factor = 0.0;
  bool log_space = false;
  BoundSource source = BoundSource::kBrudnyiGanzburg;
  std::optional<double> omega_used;
};

BoundReport remez_factor_1d(double mu, int d);
BoundReport brudnyi_ganzburg_factor(int n, int d, double lambda);

/// How omega is turned into a measure ratio.
enum class LambdaNormalization {
  kBoxVolume,   // lambda = omega / vol(box), capped at 1
  kUnitVolume,  // lambda = omega, the unit-cube reading
};

/// Bound on R_d(Z) from the certified lower span omega_lo. Throws
/// not-applicable when omega_lo = 0.
BoundReport remez_span_bound(const PointSet& z, int d, const VitushkinModel& model,
                             LambdaNormalization norm = LambdaNormalization::kBoxVolume);
BoundReport remez_span_bound(const PointSet& z, const SpanResult& span, int d,
                             LambdaNormalization norm = LambdaNormalization::kBoxVolume);

/// [R_d bound of G^1_s]^n for the n-dimensional grid; needs s > d.
BoundReport grid_product_bound(int n, int s, int d);

}  // namespace discrete_remez
