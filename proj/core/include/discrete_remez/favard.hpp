#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "discrete_remez/pointset.hpp"

namespace discrete_remez {

/// Sum over i of 1 / |prod_{j != i} (x_i - x_j)|.
double favard_subset_value(std::span<const double> points);

enum class FavardMode { kExact, kHeuristic };

/// Largest number of (d+1)-subsets the exact mode will enumerate.
inline constexpr double kFavardSubsetCap = 2e5;

struct FavardResult {
  double value = 0.0;
  /// The minimizing subset, sorted ascending.
  std::vector<double> subset;
  /// True when the value is the minimum over a heuristic family rather than all subsets.
  bool heuristic = false;
  std::size_t subsets_examined = 0;
};

/// Minimum of favard_subset_value over (d+1)-subsets of a one-dimensional set.
FavardResult favard_bound(const PointSet& z, int d, FavardMode mode = FavardMode::kExact);

}  // namespace discrete_remez
