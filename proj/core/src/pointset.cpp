#include "discrete_remez/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

Box::Box(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  require(!lo_.empty(), ErrorCode::kInvalidParameter, "box dimension must be >= 1");
  require(lo_.size() == hi_.size(), ErrorCode::kInvalidParameter,
          "box lo/hi arity mismatch");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    require(std::isfinite(lo_[i]) && std::isfinite(hi_[i]) && lo_[i] < hi_[i],
            ErrorCode::kInvalidParameter,
            fmt::format("box side {} is empty: [{}, {}]", i, lo_[i], hi_[i]));
  }
}

Box Box::symmetric_unit(std::size_t dim) {
  return Box(std::vector<double>(dim, -1.0), std::vector<double>(dim, 1.0));
}

double Box::volume() const noexcept {
  double v = 1.0;
  for (std::size_t i = 0; i < dim(); ++i) v *= side(i);
  return v;
}

double Box::diameter() const noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) d = std::max(d, side(i));
  return d;
}

bool Box::contains(std::span<const double> x) const noexcept {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(x[i] >= lo_[i] && x[i] <= hi_[i])) return false;
  }
  return true;
}

PointSet::PointSet(Box box, std::vector<double> coords)
    : box_(std::move(box)), coords_(std::move(coords)) {
  const std::size_t n = box_.dim();
  require(coords_.size() % n == 0, ErrorCode::kInvalidParameter,
          "coordinate count is not a multiple of the dimension");
  const std::size_t count = coords_.size() / n;
  for (std::size_t i = 0; i < count; ++i) {
    require(box_.contains(point(i)), ErrorCode::kInvalidParameter,
            fmt::format("point {} lies outside the box", i));
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto lex_less = [&](std::size_t a, std::size_t b) {
    auto pa = point(a), pb = point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(order.begin(), order.end(), lex_less);
  for (std::size_t k = 1; k < count; ++k) {
    auto pa = point(order[k - 1]), pb = point(order[k]);
    require(!std::equal(pa.begin(), pa.end(), pb.begin()),
            ErrorCode::kInvalidParameter,
            fmt::format("duplicate point at indices {} and {}",
                        std::min(order[k - 1], order[k]),
                        std::max(order[k - 1], order[k])));
  }
}

namespace {

std::vector<double> flatten(const Box& box, const std::vector<std::vector<double>>& points) {
  std::vector<double> coords;
  coords.reserve(points.size() * box.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(points[i].size() == box.dim(), ErrorCode::kInvalidParameter,
            fmt::format("point {} has arity {}, expected {}", i, points[i].size(),
                        box.dim()));
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  return coords;
}

}  // namespace

PointSet::PointSet(Box box, const std::vector<std::vector<double>>& points)
    : PointSet(box, flatten(box, points)) {}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<double> coords;
  coords.reserve(indices.size() * dim());
  for (std::size_t i : indices) {
    auto p = point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(box_, std::move(coords));
}

double linf_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

namespace {

std::vector<double> grid_nodes(int s) {
  std::vector<double> nodes(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    nodes[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (s - 1);
  }
  nodes.front() = -1.0;
  nodes.back() = 1.0;
  return nodes;
}

}  // namespace

PointSet make_grid_1d(int s) {
  require(s >= 2, ErrorCode::kInvalidParameter, "grid needs s >= 2");
  return PointSet(Box::symmetric_unit(1), grid_nodes(s));
}

PointSet make_grid_nd(int n, int s, std::size_t cap) {
  require(n >= 1, ErrorCode::kInvalidParameter, "grid needs n >= 1");
  require(s >= 2, ErrorCode::kInvalidParameter, "grid needs s >= 2");
  std::size_t count = 1;
  for (int k = 0; k < n; ++k) {
    require(count <= cap / static_cast<std::size_t>(s), ErrorCode::kTooLarge,
            fmt::format("grid {}^{} exceeds the cap of {} points", s, n, cap));
    count *= static_cast<std::size_t>(s);
  }
  const auto nodes = grid_nodes(s);
  const auto dim = static_cast<std::size_t>(n);
  std::vector<double> coords(count * dim);
  // Row-major odometer; the last axis varies fastest, giving lexicographic order.
  std::vector<std::size_t> digit(dim, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t a = 0; a < dim; ++a) coords[i * dim + a] = nodes[digit[a]];
    for (std::size_t a = dim; a-- > 0;) {
      if (++digit[a] < nodes.size()) break;
      digit[a] = 0;
    }
  }
  return PointSet(Box::symmetric_unit(dim), std::move(coords));
}

PointSet make_power_set(double r, int count) {
  require(r > 0.0 && std::isfinite(r), ErrorCode::kInvalidParameter, "power set needs r > 0");
  require(count >= 1, ErrorCode::kInvalidParameter, "power set needs K >= 1");
  std::vector<double> coords(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    coords[static_cast<std::size_t>(k - 1)] = 1.0 / std::pow(static_cast<double>(k), r);
  }
  return PointSet(Box::symmetric_unit(1), std::move(coords));
}

PointSet make_geometric_set(double q, int count) {
  require(q > 0.0 && q < 1.0, ErrorCode::kInvalidParameter, "geometric set needs 0 < q < 1");
  require(count >= 1, ErrorCode::kInvalidParameter, "geometric set needs K >= 1");
  std::vector<double> coords(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    coords[static_cast<std::size_t>(m)] = std::pow(q, m);
  }
  return PointSet(Box::symmetric_unit(1), std::move(coords));
}

double min_pairwise_distance(const PointSet& z) {
  require(z.size() >= 2, ErrorCode::kInsufficientPoints,
          "minimal distance needs at least two points");
  if (z.dim() == 1) {
    std::vector<double> xs = z.coords();
    std::sort(xs.begin(), xs.end());
    double best = xs[1] - xs[0];
    for (std::size_t i = 2; i < xs.size(); ++i) best = std::min(best, xs[i] - xs[i - 1]);
    return best;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      best = std::min(best, linf_distance(z.point(i), z.point(j)));
    }
  }
  return best;
}

PointSet dense_subset(const PointSet& z, double eps) {
  require(eps > 0.0, ErrorCode::kInvalidParameter, "dense subset needs eps > 0");
  const double side = 0.5 * eps;
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto pa = z.point(a), pb = z.point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });
  std::vector<bool> covered(z.size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t anchor : order) {
    if (covered[anchor]) continue;
    reps.push_back(anchor);
    auto a = z.point(anchor);
    for (std::size_t j : order) {
      if (covered[j]) continue;
      auto p = z.point(j);
      bool inside = true;
      for (std::size_t k = 0; k < z.dim() && inside; ++k) {
        inside = p[k] >= a[k] - kFitSlack && p[k] - a[k] <= side + kFitSlack;
      }
      if (inside) covered[j] = true;
    }
  }
  std::sort(reps.begin(), reps.end());
  return z.subset(reps);
}

}  // namespace discrete_remez
