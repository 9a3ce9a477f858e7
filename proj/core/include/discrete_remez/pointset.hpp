#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace discrete_remez {

/// Absolute slack used whenever a coordinate gap is tested against a cube side.
inline constexpr double kFitSlack = 1e-12;

/// Axis-aligned box; the domain on which polynomial suprema are taken.
class Box {
 public:
  Box(std::vector<double> lo, std::vector<double> hi);

  /// [-1, 1]^dim.
  static Box symmetric_unit(std::size_t dim);

  std::size_t dim() const noexcept { return lo_.size(); }
  const std::vector<double>& lo() const noexcept { return lo_; }
  const std::vector<double>& hi() const noexcept { return hi_; }
  double side(std::size_t axis) const { return hi_[axis] - lo_[axis]; }
  double volume() const noexcept;
  /// Largest side length, i.e. the l-infinity diameter.
  double diameter() const noexcept;
  bool contains(std::span<const double> x) const noexcept;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// A finite set of distinct points inside a box, stored row-major.
///
/// Construction validates the invariants (arity, containment, distinctness);
/// instances are immutable afterwards.
class PointSet {
 public:
  PointSet(Box box, std::vector<double> coords);
  PointSet(Box box, const std::vector<std::vector<double>>& points);

  std::size_t dim() const noexcept { return box_.dim(); }
  std::size_t size() const noexcept { return coords_.size() / box_.dim(); }
  const Box& box() const noexcept { return box_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim(), dim()};
  }
  double coord(std::size_t i, std::size_t axis) const {
    return coords_[i * dim() + axis];
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  /// The points with indices in `indices`, same box.
  PointSet subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  Box box_;
  std::vector<double> coords_;
};

double linf_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Regular grid -1 + 2(i-1)/(s-1), i = 1..s, on [-1, 1].
PointSet make_grid_1d(int s);

inline constexpr std::size_t kDefaultGridCap = std::size_t{1} << 22;

/// Cartesian power of make_grid_1d(s); throws too-large past `cap` points.
PointSet make_grid_nd(int n, int s, std::size_t cap = kDefaultGridCap);

/// {1/k^r : k = 1..count} on [-1, 1].
PointSet make_power_set(double r, int count);

/// {q^m : m = 0..count-1} on [-1, 1].
PointSet make_geometric_set(double q, int count);

double min_pairwise_distance(const PointSet& z);

/// One representative of Z per cube in a greedy cover by cubes of side eps/2,
/// each cube anchored at the lexicographically smallest uncovered point.
/// Every point of Z lies within eps/2 (l-infinity) of a representative.
PointSet dense_subset(const PointSet& z, double eps);

}  // namespace discrete_remez
