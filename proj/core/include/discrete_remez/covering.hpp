#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discrete_remez/pointset.hpp"

namespace discrete_remez {

// Covering sets are closed l-infinity cubes of side eps. Two points at distance
// exactly eps share a cube.

/// M(eps, Z) = count for eps in [eps_min, eps_max).
struct CoveringPiece {
  std::size_t count = 0;
  double eps_min = 0.0;
  double eps_max = 0.0;
};

class CoveringProfile {
 public:
  explicit CoveringProfile(std::vector<CoveringPiece> pieces);

  const std::vector<CoveringPiece>& pieces() const noexcept { return pieces_; }
  std::size_t count_at(double eps) const;

 private:
  std::vector<CoveringPiece> pieces_;
};

/// Certified enclosure m_lo <= M(eps, Z) <= m_hi.
struct CoveringInterval {
  std::size_t m_lo = 0;
  std::size_t m_hi = 0;
  double eps = 0.0;
};

/// Exact M(eps, Z) in one dimension by the left-to-right greedy sweep.
std::size_t covering_number_1d(const PointSet& z, double eps);

/// Exact step function eps -> M(eps, Z) in one dimension. The piece with count
/// k starts at the 1D k-center optimum.
CoveringProfile covering_profile_1d(const PointSet& z);

/// Cubes anchored at the lexicographically smallest uncovered point.
std::size_t greedy_cover_count(const PointSet& z, double eps);

/// Greedy (lexicographic) subset with pairwise distance > eps; never exceeds
/// M(eps, Z).
std::size_t packing_number(const PointSet& z, double eps);

/// Distinct positive coordinate differences, ascending. Greedy cover and
/// packing counts are constant between consecutive values.
std::vector<double> candidate_scales(const PointSet& z);

/// m_lo and m_hi at every candidate scale, made monotone in eps: m_hi takes the
/// best greedy cover at any smaller scale, m_lo the best packing at any larger
/// one. Both remain certified. On (0, scales[0]) both equal |Z|.
/// Beyond max_scales candidates in two or more dimensions, an evenly strided
/// subset is kept; m_hi is taken at the left end and m_lo just below the right
/// end of each coarser piece, so the bounds stay certified but loosen.
inline constexpr std::size_t kDefaultTableScales = 2048;
struct CoveringTable {
  std::vector<double> scales;
  std::vector<std::size_t> m_lo;
  std::vector<std::size_t> m_hi;
};
CoveringTable covering_table(const PointSet& z, std::size_t max_scales = kDefaultTableScales);

/// Enclosure of M(eps, Z); exact (m_lo = m_hi) in one dimension. In higher
/// dimensions the envelope looks at up to kEnvelopeScales candidate scales on
/// each side of eps.
inline constexpr std::size_t kEnvelopeScales = 64;
CoveringInterval covering_bounds_nd(const PointSet& z, double eps);

/// Rows "k,eps_min,eps_max" with a header line.
std::string profile_to_csv(const CoveringProfile& profile);

}  // namespace discrete_remez
