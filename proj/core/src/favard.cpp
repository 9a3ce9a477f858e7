#include "discrete_remez/favard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> subset;
  std::size_t examined = 0;

  void offer(std::vector<double> pts) {
    ++examined;
    const double v = favard_subset_value(pts);
    if (v < value) {
      value = v;
      std::sort(pts.begin(), pts.end());
      subset = std::move(pts);
    }
  }
};

}  // namespace

double favard_subset_value(std::span<const double> points) {
  require(!points.empty(), ErrorCode::kInvalidParameter, "Favard value needs at least one point");
  // Extended precision so that short rational cases come out exact.
  long double sum = 0.0L;
  for (std::size_t i = 0; i < points.size(); ++i) {
    long double prod = 1.0L;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const long double diff = static_cast<long double>(points[i]) - points[j];
      require(diff != 0.0, ErrorCode::kInvalidParameter,
              fmt::format("coincident points at positions {} and {}", i, j));
      prod *= diff;
    }
    sum += 1.0L / std::abs(prod);
  }
  return static_cast<double>(sum);
}

FavardResult favard_bound(const PointSet& z, int d, FavardMode mode) {
  require(z.dim() == 1, ErrorCode::kInvalidParameter, "Favard bound is one-dimensional");
  require(d >= 0, ErrorCode::kInvalidParameter, "degree must be >= 0");
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  require(z.size() >= k, ErrorCode::kNotApplicable,
          fmt::format("Favard bound needs at least {} points, got {}", k, z.size()));
  std::vector<double> x = z.coords();
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();

  FavardResult out;
  Best best;
  if (mode == FavardMode::kExact && binomial(n, k) <= kFavardSubsetCap) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<double> pts(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) pts[i] = x[idx[i]];
      best.offer(pts);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    out.heuristic = true;
    for (std::size_t s = 0; s + k <= n; ++s) {
      best.offer(std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(s),
                                     x.begin() + static_cast<std::ptrdiff_t>(s + k)));
    }
    // Farthest-point greedy from every start: spread-out nodes keep A' large.
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<double> dist(n, std::numeric_limits<double>::infinity());
      std::vector<double> pts{x[start]};
      std::size_t last = start;
      for (std::size_t step = 1; step < k; ++step) {
        std::size_t far = n;
        for (std::size_t i = 0; i < n; ++i) {
          dist[i] = std::min(dist[i], std::abs(x[i] - x[last]));
          if (dist[i] > 0.0 && (far == n || dist[i] > dist[far])) far = i;
        }
        last = far;
        pts.push_back(x[far]);
      }
      best.offer(std::move(pts));
    }
  }
  out.value = best.value;
  out.subset = std::move(best.subset);
  out.subsets_examined = best.examined;
  return out;
}

}  // namespace discrete_remez
