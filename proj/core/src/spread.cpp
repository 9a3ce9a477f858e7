#include "discrete_remez/spread.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> distance_matrix(const PointSet& z, Metric metric) {
  const std::size_t n = z.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = distance(metric, z.point(i), z.point(j));
    }
  }
  return d;
}

// Prim on k points given pairwise distances; returns the beta-weight of the MST.
template <class Dist>
double prim_weight(std::size_t k, Dist&& dist, double beta) {
  if (k < 2) return 0.0;
  std::vector<double> best(k, kInf);
  std::vector<char> in(k, 0);
  in[0] = 1;
  for (std::size_t j = 1; j < k; ++j) best[j] = dist(0, j);
  double total = 0.0;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (!in[j] && (pick == k || best[j] < best[pick])) pick = j;
    }
    in[pick] = 1;
    total += std::pow(best[pick], beta);
    for (std::size_t j = 0; j < k; ++j) {
      if (!in[j]) best[j] = std::min(best[j], dist(pick, j));
    }
  }
  return total;
}

// Farthest-point insertion starting from the lexicographically first
// diametral pair. gaps[k] is the distance from the (k+1)-th chosen point to
// the earlier ones, so gaps[1] is the diameter and gaps is nonincreasing.
struct FarthestOrder {
  std::vector<std::size_t> order;
  std::vector<double> gaps;
};

FarthestOrder farthest_order(const PointSet& z, Metric metric) {
  const std::size_t n = z.size();
  FarthestOrder f;
  std::size_t a = 0, b = 1;
  double diam = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(metric, z.point(i), z.point(j));
      if (d > diam) {
        diam = d;
        a = i;
        b = j;
      }
    }
  }
  f.order = {a, b};
  f.gaps = {0.0, diam};
  std::vector<double> near(n, kInf);
  std::vector<char> used(n, 0);
  used[a] = used[b] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    near[i] = std::min(distance(metric, z.point(i), z.point(a)), distance(metric, z.point(i), z.point(b)));
  }
  while (f.order.size() < n) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && (pick == n || near[i] > near[pick])) pick = i;
    }
    used[pick] = 1;
    f.order.push_back(pick);
    f.gaps.push_back(near[pick]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) near[i] = std::min(near[i], distance(metric, z.point(i), z.point(pick)));
    }
  }
  return f;
}

EtaBounds greedy_eta(const FarthestOrder& f, std::size_t p) {
  const double g = f.gaps[p - 1];
  return {g, std::min(2.0 * g, f.gaps[1]), false};
}

bool has_clique(const std::vector<std::uint32_t>& adj, std::uint32_t cand, int need) {
  if (need == 0) return true;
  while (cand != 0) {
    if (std::popcount(cand) < need) return false;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(adj, cand & adj[static_cast<std::size_t>(v)], need - 1)) return true;
  }
  return false;
}

// Largest t such that some p points are pairwise at distance >= t.
double exact_eta(const std::vector<double>& dist, std::size_t n, int p) {
  std::vector<double> levels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) levels.push_back(dist[i * n + j]);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
  auto feasible = [&](double t) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && dist[i * n + j] >= t) adj[i] |= 1u << j;
      }
    }
    return has_clique(adj, all, p);
  };
  // levels[0] is always feasible: any p points are at least that far apart.
  std::size_t lo = 0, hi = levels.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(levels[mid])) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return levels[lo];
}

void check_p(const PointSet& z, int p) {
  require(p >= 2 && static_cast<std::size_t>(p) <= z.size(), ErrorCode::kInvalidParameter,
          fmt::format("p must lie in [2, {}], got {}", z.size(), p));
}

void check_beta(double beta) {
  require(std::isfinite(beta) && beta > 0.0, ErrorCode::kInvalidParameter,
          fmt::format("beta must be positive, got {}", beta));
}

struct ExactSpread {
  double value = 0.0;
  std::vector<std::size_t> subset;
};

ExactSpread exact_spread(const std::vector<double>& dist, std::size_t n, double beta) {
  ExactSpread best;
  std::vector<std::size_t> members;
  for (std::uint32_t mask = 3; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    const double w = prim_weight(members.size(), [&](std::size_t a, std::size_t b) {
      return dist[members[a] * n + members[b]];
    }, beta);
    if (w > best.value) {
      best.value = w;
      best.subset = members;
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(Metric m) noexcept {
  return m == Metric::kLinf ? "linf" : "euclidean";
}

double distance(Metric m, std::span<const double> a, std::span<const double> b) {
  return m == Metric::kLinf ? linf_distance(a, b) : euclidean_distance(a, b);
}

SpanningTree mst(const PointSet& z, Metric metric) {
  const std::size_t n = z.size();
  require(n >= 2, ErrorCode::kInsufficientPoints,
          fmt::format("spanning tree needs at least 2 points, got {}", n));
  std::vector<TreeEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, distance(metric, z.point(i), z.point(j))});
  }
  std::sort(edges.begin(), edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  SpanningTree tree;
  tree.metric = metric;
  for (const auto& e : edges) {
    const std::size_t a = find(e.i), b = find(e.j);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    tree.edges.push_back(e);
    if (tree.edges.size() + 1 == n) break;
  }
  return tree;
}

double beta_weight(const SpanningTree& tree, double beta) {
  check_beta(beta);
  double total = 0.0;
  for (const auto& e : tree.edges) total += std::pow(e.dist, beta);
  return total;
}

EtaBounds eta(const PointSet& z, int p, EtaMode mode, Metric metric) {
  check_p(z, p);
  if (mode == EtaMode::kExact && p <= kEtaExactMaxP && z.size() <= kEtaExactMaxPoints) {
    const double v = exact_eta(distance_matrix(z, metric), z.size(), p);
    return {v, v, true};
  }
  return greedy_eta(farthest_order(z, metric), static_cast<std::size_t>(p));
}

SpreadReport beta_spread(const PointSet& z, double beta, SpreadMode mode, Metric metric, int p_max) {
  check_beta(beta);
  const std::size_t n = z.size();
  SpreadReport r;
  r.beta = beta;
  r.metric = metric;
  if (n < 2) {
    r.exact = true;
    if (n == 1) r.best_subset = {0};
    return r;
  }
  const int top = p_max <= 0 ? static_cast<int>(n) : std::min(p_max, static_cast<int>(n));
  const FarthestOrder f = farthest_order(z, metric);

  if (mode == SpreadMode::kExact && n <= kSpreadExactMaxPoints) {
    const std::vector<double> dist = distance_matrix(z, metric);
    r.rho_full = prim_weight(n, [&](std::size_t a, std::size_t b) { return dist[a * n + b]; }, beta);
    ExactSpread best = exact_spread(dist, n, beta);
    r.v_lo = r.v_hi = best.value;
    r.best_subset = std::move(best.subset);
    r.exact = true;
    for (int p = 2; p <= top; ++p) {
      if (p <= kEtaExactMaxP) {
        const double v = exact_eta(dist, n, p);
        r.eta_table[p] = {v, v, true};
      } else {
        r.eta_table[p] = greedy_eta(f, static_cast<std::size_t>(p));
      }
    }
    return r;
  }

  auto prefix_weight = [&](std::size_t k) {
    return prim_weight(k, [&](std::size_t a, std::size_t b) {
      return distance(metric, z.point(f.order[a]), z.point(f.order[b]));
    }, beta);
  };
  std::vector<std::size_t> sizes;
  for (std::size_t k = 2; k <= n; k = std::max(k + 1, k < 32 ? k + 1 : k + k / 4)) sizes.push_back(k);
  if (sizes.back() != n) sizes.push_back(n);
  std::size_t best_k = 2;
  for (std::size_t k : sizes) {
    const double w = prefix_weight(k);
    if (k == n) r.rho_full = w;
    if (w > r.v_lo) {
      r.v_lo = w;
      best_k = k;
    }
  }
  r.best_subset.assign(f.order.begin(), f.order.begin() + static_cast<std::ptrdiff_t>(best_k));
  std::sort(r.best_subset.begin(), r.best_subset.end());
  for (std::size_t j = 2; j <= n; ++j) r.v_hi += std::pow(greedy_eta(f, j).hi, beta);
  r.v_hi = std::max(r.v_hi, r.v_lo);
  for (int p = 2; p <= top; ++p) r.eta_table[p] = greedy_eta(f, static_cast<std::size_t>(p));
  return r;
}

SandwichResult sandwich_check(const PointSet& z, double beta, int p_max, Metric metric) {
  check_beta(beta);
  const std::size_t n = z.size();
  require(n >= 2, ErrorCode::kInsufficientPoints, "sandwich check needs at least 2 points");
  require(n <= kSpreadExactMaxPoints, ErrorCode::kTooLarge,
          fmt::format("sandwich check enumerates subsets; at most {} points, got {}",
                      kSpreadExactMaxPoints, n));
  const std::size_t top = p_max <= 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(p_max), n);
  const std::vector<double> dist = distance_matrix(z, metric);
  SandwichResult s;
  s.spread = exact_spread(dist, n, beta).value;
  for (std::size_t p = 2; p <= n; ++p) {
    const double e = std::pow(exact_eta(dist, n, static_cast<int>(p)), beta);
    s.upper += e;
    if (p <= top) s.lower = std::max(s.lower, static_cast<double>(p - 1) * e);
  }
  const double slack = 1e-12;
  s.pass = s.lower <= s.spread * (1.0 + slack) && s.spread <= s.upper * (1.0 + slack);
  return s;
}

double zeta(double x, double tol) {
  require(x > 1.0, ErrorCode::kDivergent, fmt::format("zeta diverges for x = {} <= 1", x));
  require(tol > 0.0 && tol < 1.0, ErrorCode::kInvalidParameter, "tolerance must lie in (0, 1)");
  const double raw = std::ceil(std::pow(tol, -1.0 / (x - 1.0)));
  const double cutoff = std::clamp(std::isfinite(raw) ? raw : 1e7, 2.0, 1e7);
  const auto big_n = static_cast<long>(cutoff);
  double sum = 0.0;
  for (long k = big_n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -x);
  // Tail from N on: integral plus half the first term.
  const double nn = static_cast<double>(big_n);
  return sum + std::pow(nn, 1.0 - x) / (x - 1.0) + 0.5 * std::pow(nn, -x);
}

PositivityVerdict spread_positivity_check(const PointSet& z, double beta, double cprime, Metric metric) {
  const std::size_t n = z.dim();
  require(n >= 2, ErrorCode::kNotApplicable, "spread criterion needs dimension >= 2");
  const double lo = static_cast<double>(n - 1), hi = static_cast<double>(n);
  require(beta > lo && beta <= hi, ErrorCode::kInvalidParameter,
          fmt::format("beta must lie in ({}, {}], got {}", lo, hi, beta));
  require(cprime > 0.0, ErrorCode::kInvalidParameter, "C' must be positive");
  const double s = beta / lo;
  PositivityVerdict v;
  v.threshold = std::pow(cprime, s) * zeta(s);
  const SpreadReport r = beta_spread(z, beta, SpreadMode::kExact, metric, 2);
  v.v_lo = r.v_lo;
  v.exact_spread = r.exact;
  v.positive = v.v_lo > v.threshold;
  return v;
}

double dispersion_span_bound(const PointSet& z, int p, const VitushkinModel& model, bool simplified) {
  check_p(z, p);
  const int n = static_cast<int>(z.dim());
  require(model.n() == n, ErrorCode::kInvalidParameter,
          fmt::format("model dimension {} does not match set dimension {}", model.n(), n));
  const double e = eta(z, p, EtaMode::kExact).lo;
  const double md = simplified ? model.coefficient_sum() * std::pow(e, 1 - n) : model(e);
  return std::max(0.0, std::pow(e, n) * (static_cast<double>(p) - md));
}

}  // namespace discrete_remez
