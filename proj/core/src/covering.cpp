#include "discrete_remez/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool fits(double gap, double side) { return gap <= side + kFitSlack; }

std::vector<double> sorted_coords_1d(const PointSet& z) {
  std::vector<double> xs = z.coords();
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::size_t sweep_count(const std::vector<double>& xs, double eps) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < xs.size()) {
    const double anchor = xs[i];
    ++count;
    while (i < xs.size() && fits(xs[i] - anchor, eps)) ++i;
  }
  return count;
}

std::vector<double> dedupe_sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (!(v > 0.0)) continue;
    if (out.empty() || v > out.back() + kFitSlack) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> lex_order(const PointSet& z) {
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto pa = z.point(a), pb = z.point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });
  return order;
}

void check_eps(double eps) {
  require(eps > 0.0, ErrorCode::kInvalidParameter, fmt::format("eps must be > 0, got {}", eps));
}

}  // namespace

CoveringProfile::CoveringProfile(std::vector<CoveringPiece> pieces)
    : pieces_(std::move(pieces)) {}

std::size_t CoveringProfile::count_at(double eps) const {
  check_eps(eps);
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), eps,
                             [](double e, const CoveringPiece& p) { return e < p.eps_min; });
  if (it == pieces_.begin()) return pieces_.front().count;
  return std::prev(it)->count;
}

std::size_t covering_number_1d(const PointSet& z, double eps) {
  require(z.dim() == 1, ErrorCode::kInvalidParameter, "covering_number_1d needs dim 1");
  check_eps(eps);
  return sweep_count(sorted_coords_1d(z), eps);
}

CoveringProfile covering_profile_1d(const PointSet& z) {
  require(z.dim() == 1, ErrorCode::kInvalidParameter, "covering_profile_1d needs dim 1");
  const auto xs = sorted_coords_1d(z);
  std::vector<double> diffs;
  diffs.reserve(xs.size() * (xs.size() - 1) / 2);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) diffs.push_back(xs[j] - xs[i]);
  }
  const auto cand = dedupe_sorted(std::move(diffs));

  std::vector<CoveringPiece> pieces;
  std::size_t count = xs.size();
  double start = 0.0;
  std::size_t lo = 0;
  while (count > 1) {
    // First candidate with a strictly smaller count; the count is
    // nonincreasing along the candidates, so bisection applies.
    std::size_t a = lo, b = cand.size();
    while (a < b) {
      const std::size_t mid = a + (b - a) / 2;
      if (sweep_count(xs, cand[mid]) < count) {
        b = mid;
      } else {
        a = mid + 1;
      }
    }
    // a < cand.size() always: the largest difference gives count 1.
    const double e = cand[a];
    pieces.push_back({count, start, e});
    count = sweep_count(xs, e);
    start = e;
    lo = a + 1;
  }
  pieces.push_back({1, start, kInf});
  return CoveringProfile(std::move(pieces));
}

std::size_t greedy_cover_count(const PointSet& z, double eps) {
  check_eps(eps);
  const auto order = lex_order(z);
  const std::size_t n = z.dim();
  std::vector<bool> covered(z.size(), false);
  std::vector<double> lo(n);
  std::vector<std::size_t> slab;
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t anchor = order[pos];
    if (covered[anchor]) continue;
    ++count;
    auto a = z.point(anchor);
    // Uncovered points that share a cube with the anchor along every axis.
    slab.clear();
    for (std::size_t q = pos; q < order.size(); ++q) {
      const std::size_t j = order[q];
      auto p = z.point(j);
      if (!fits(p[0] - a[0], eps)) break;
      if (!covered[j] && fits(linf_distance(p, a), eps)) slab.push_back(j);
    }
    // The cube starts at the anchor along axis 0 and as low as the slab
    // allows along the others, never so low that it loses the anchor.
    lo[0] = a[0];
    for (std::size_t k = 1; k < n; ++k) {
      lo[k] = a[k];
      for (std::size_t j : slab) lo[k] = std::min(lo[k], z.coord(j, k));
      lo[k] = std::max(lo[k], a[k] - eps);
    }
    for (std::size_t j : slab) {
      auto p = z.point(j);
      bool inside = true;
      for (std::size_t k = 1; k < n && inside; ++k) inside = p[k] >= lo[k] - kFitSlack && fits(p[k] - lo[k], eps);
      if (inside) covered[j] = true;
    }
  }
  return count;
}

std::size_t packing_number(const PointSet& z, double eps) {
  check_eps(eps);
  const auto order = lex_order(z);
  std::vector<std::size_t> chosen;
  for (std::size_t j : order) {
    auto p = z.point(j);
    bool separated = true;
    // Chosen points are in lexicographic order, so axis-0 gaps grow backwards.
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      auto c = z.point(*it);
      if (!fits(p[0] - c[0], eps)) break;
      if (fits(linf_distance(p, c), eps)) {
        separated = false;
        break;
      }
    }
    if (separated) chosen.push_back(j);
  }
  return chosen.size();
}

std::vector<double> candidate_scales(const PointSet& z) {
  std::vector<double> diffs;
  for (std::size_t k = 0; k < z.dim(); ++k) {
    std::vector<double> axis(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) axis[i] = z.coord(i, k);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    for (std::size_t i = 0; i < axis.size(); ++i) {
      for (std::size_t j = i + 1; j < axis.size(); ++j) diffs.push_back(axis[j] - axis[i]);
    }
  }
  return dedupe_sorted(std::move(diffs));
}

CoveringTable covering_table(const PointSet& z, std::size_t max_scales) {
  require(max_scales >= 2, ErrorCode::kInvalidParameter, "max_scales must be >= 2");
  CoveringTable t;
  const auto all = candidate_scales(z);
  if (z.dim() == 1) {
    t.scales = all;
    const auto xs = sorted_coords_1d(z);
    for (double s : t.scales) {
      t.m_lo.push_back(sweep_count(xs, s));
      t.m_hi.push_back(t.m_lo.back());
    }
    return t;
  }
  // Indices of the kept scales; the last piece always reaches the largest one.
  std::vector<std::size_t> keep;
  if (all.size() <= max_scales) {
    keep.resize(all.size());
    std::iota(keep.begin(), keep.end(), std::size_t{0});
  } else {
    for (std::size_t k = 0; k < max_scales; ++k) keep.push_back(k * (all.size() - 1) / (max_scales - 1));
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t right = k + 1 < keep.size() ? keep[k + 1] - 1 : all.size() - 1;
    t.scales.push_back(all[keep[k]]);
    t.m_hi.push_back(greedy_cover_count(z, all[keep[k]]));
    t.m_lo.push_back(packing_number(z, all[right]));
  }
  const std::size_t m = t.scales.size();
  for (std::size_t i = 1; i < m; ++i) t.m_hi[i] = std::min(t.m_hi[i], t.m_hi[i - 1]);
  for (std::size_t i = m; i-- > 1;) t.m_lo[i - 1] = std::max(t.m_lo[i - 1], t.m_lo[i]);
  return t;
}

CoveringInterval covering_bounds_nd(const PointSet& z, double eps) {
  check_eps(eps);
  if (z.dim() == 1) {
    const std::size_t m = covering_number_1d(z, eps);
    return {m, m, eps};
  }
  std::size_t m_hi = greedy_cover_count(z, eps);
  std::size_t m_lo = packing_number(z, eps);
  const auto scales = candidate_scales(z);
  const auto split = static_cast<std::size_t>(std::upper_bound(scales.begin(), scales.end(), eps) - scales.begin());
  for (std::size_t i = split > kEnvelopeScales ? split - kEnvelopeScales : 0; i < split; ++i) {
    m_hi = std::min(m_hi, greedy_cover_count(z, scales[i]));
  }
  for (std::size_t i = split; i < std::min(scales.size(), split + kEnvelopeScales); ++i) {
    m_lo = std::max(m_lo, packing_number(z, scales[i]));
  }
  return {m_lo, m_hi, eps};
}

std::string profile_to_csv(const CoveringProfile& profile) {
  std::string out = "k,eps_min,eps_max\n";
  for (const auto& p : profile.pieces()) {
    out += fmt::format("{},{:.17g},{:.17g}\n", p.count, p.eps_min, p.eps_max);
  }
  return out;
}

}  // namespace discrete_remez
