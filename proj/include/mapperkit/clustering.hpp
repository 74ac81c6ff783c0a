#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapperkit/error.hpp"
#include "mapperkit/metric.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

enum class ClusteringKind { Dbscan, RadiusComponents };

std::string_view to_string(ClusteringKind kind) noexcept;
std::optional<ClusteringKind> parse_clustering_kind(std::string_view name) noexcept;

struct ClusteringSpec {
  ClusteringKind kind = ClusteringKind::RadiusComponents;
  double eps_db = 1.0;
  std::size_t min_pts = 1;  // dbscan only

  void validate() const;
  std::string describe() const;
};

/// Disjoint clusters (each ascending, ordered by smallest member) plus the
/// dbscan noise bucket. With min_pts == 1 the noise bucket is always empty.
struct Clustering {
  std::vector<std::vector<Index>> clusters;
  std::vector<Index> noise;
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Calls visit(a, b) for every pair a < b of subset positions within eps.
// For metrics that bound coordinate gaps the pairs are found by a sweep
// along the coordinate of largest spread.
template <typename Scalar, typename Visit>
void for_each_close_pair(const PointCloud<Scalar>& cloud, const std::vector<Index>& subset,
                         Metric metric, double eps, Visit&& visit) {
  const std::size_t n = subset.size();
  if (n < 2) return;
  if (!bounds_coordinate_gaps(metric)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (distance(metric, cloud.point(subset[a]), cloud.point(subset[b])) <= eps) visit(a, b);
      }
    }
    return;
  }
  Eigen::Index axis = 0;
  double best = -1.0;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(cloud.dim()); ++k) {
    double lo = static_cast<double>(cloud.point(subset[0])(k)), hi = lo;
    for (Index p : subset) {
      const double v = static_cast<double>(cloud.point(p)(k));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best) {
      best = hi - lo;
      axis = k;
    }
  }
  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), std::size_t{0});
  std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    return cloud.point(subset[a])(axis) < cloud.point(subset[b])(axis);
  });
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t a = sorted[s];
    const double ca = static_cast<double>(cloud.point(subset[a])(axis));
    for (std::size_t t = s + 1; t < n; ++t) {
      const std::size_t b = sorted[t];
      if (static_cast<double>(cloud.point(subset[b])(axis)) - ca > eps) break;
      if (distance(metric, cloud.point(subset[a]), cloud.point(subset[b])) <= eps) {
        visit(std::min(a, b), std::max(a, b));
      }
    }
  }
}

inline std::vector<std::vector<Index>> groups_from_roots(const std::vector<Index>& subset,
                                                         std::vector<std::size_t>& parent,
                                                         const std::vector<char>& include) {
  std::vector<std::vector<Index>> groups;
  std::vector<std::size_t> slot(subset.size(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (!include[a]) continue;
    const std::size_t r = find_root(parent, a);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(subset[a]);
  }
  return groups;
}

}  // namespace detail

/// Clusters a subset of a cloud. Radius components are the connected
/// components of the graph joining points at distance <= eps_db. DBSCAN
/// traverses points in ascending index order; a border point reachable
/// from several cores joins the cluster of its lowest-indexed core.
template <typename Scalar>
Clustering cluster(const PointCloud<Scalar>& cloud, std::vector<Index> subset, Metric metric,
                   const ClusteringSpec& spec) {
  spec.validate();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Index p : subset) {
    if (p >= cloud.size()) {
      throw Error(ErrorCode::InvalidArgument, "subset index " + std::to_string(p) +
                                                  " out of range");
    }
  }
  const std::size_t n = subset.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto unite = [&](std::size_t a, std::size_t b) {
    a = detail::find_root(parent, a);
    b = detail::find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  Clustering out;
  if (spec.kind == ClusteringKind::RadiusComponents) {
    detail::for_each_close_pair(cloud, subset, metric, spec.eps_db,
                                [&](std::size_t a, std::size_t b) { unite(a, b); });
    out.clusters = detail::groups_from_roots(subset, parent, std::vector<char>(n, 1));
    return out;
  }

  std::vector<std::vector<std::size_t>> neighbors(n);
  detail::for_each_close_pair(cloud, subset, metric, spec.eps_db,
                              [&](std::size_t a, std::size_t b) {
                                neighbors[a].push_back(b);
                                neighbors[b].push_back(a);
                              });
  std::vector<char> core(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    core[a] = neighbors[a].size() + 1 >= spec.min_pts;  // neighborhood includes the point
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!core[a]) continue;
    for (std::size_t b : neighbors[a]) {
      if (core[b]) unite(a, b);
    }
  }
  std::vector<char> assigned(core);
  for (std::size_t a = 0; a < n; ++a) {
    if (core[a]) continue;
    std::size_t best = n;
    for (std::size_t b : neighbors[a]) {
      if (core[b]) best = std::min(best, b);
    }
    if (best == n) {
      out.noise.push_back(subset[a]);
    } else {
      // Border points hang off the root of their chosen core; they never
      // connect two cores.
      parent[a] = detail::find_root(parent, best);
      assigned[a] = 1;
    }
  }
  auto groups = detail::groups_from_roots(subset, parent, assigned);
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.clusters = std::move(groups);
  return out;
}

}  // namespace mapperkit
