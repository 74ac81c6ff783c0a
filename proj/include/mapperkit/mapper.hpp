#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "mapperkit/clustering.hpp"
#include "mapperkit/cover_graph.hpp"
#include "mapperkit/error.hpp"
#include "mapperkit/metric.hpp"
#include "mapperkit/parallel.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Product cover of the lens bounding box by closed, overlapping intervals.
/// Consecutive intervals on an axis overlap by `gain` of their length. A
/// zero-width axis gets a single degenerate interval.
struct IntervalCover {
  static constexpr std::size_t kMaxDimension = 3;

  std::vector<std::vector<Interval>> axes;
  std::vector<std::size_t> resolution;
  double gain = 0.0;

  std::size_t dimension() const noexcept { return axes.size(); }
  std::size_t cube_count() const noexcept;
  /// Per-axis interval indices of cube `c`, last axis fastest.
  std::vector<std::size_t> cube(std::size_t c) const;
  bool cube_contains(std::size_t c, const Eigen::Ref<const Eigen::RowVectorXd>& value) const;
};

/// Lens values are given one row per point.
IntervalCover cover_range(const Eigen::MatrixXd& lens, const std::vector<std::size_t>& resolution,
                          double gain);

/// Classical Mapper: clusters of each cube preimage become vertices, edges
/// join vertices sharing points. DBSCAN noise points become singleton
/// vertices. Vertex ids are "<cube>.<ordinal>".
template <typename Scalar>
CoverGraph build_mapper(const PointCloud<Scalar>& cloud, const Eigen::MatrixXd& lens,
                        const IntervalCover& cover, Metric metric, const ClusteringSpec& spec,
                        const std::string& lens_description = "custom") {
  spec.validate();
  if (static_cast<Index>(lens.rows()) != cloud.size()) {
    throw Error(ErrorCode::DimensionMismatch, "lens has " + std::to_string(lens.rows()) +
                                                  " rows for " + std::to_string(cloud.size()) +
                                                  " points");
  }
  if (static_cast<std::size_t>(lens.cols()) != cover.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "lens dimension does not match the cover");
  }

  const std::size_t n_cubes = cover.cube_count();
  std::vector<Clustering> per_cube(n_cubes);
  parallel::for_each_index(n_cubes, [&](std::size_t c) {
    std::vector<Index> preimage;
    for (Index i = 0; i < cloud.size(); ++i) {
      if (cover.cube_contains(c, lens.row(static_cast<Eigen::Index>(i)))) preimage.push_back(i);
    }
    if (!preimage.empty()) per_cube[c] = cluster(cloud, std::move(preimage), metric, spec);
  });

  CoverGraph g;
  g.source_cloud_id = cloud.id();
  g.cloud_size = cloud.size();
  std::string res;
  for (std::size_t k : cover.resolution) res += (res.empty() ? "" : "x") + std::to_string(k);
  g.id = "mapper/" + cloud.id() + "/" + lens_description + "/k=" + res + "/p=" +
         format_param(cover.gain) + "/" + spec.describe();
  g.params["algorithm"] = "mapper";
  g.params["lens"] = lens_description;
  g.params["resolution"] = res;
  g.params["gain"] = format_param(cover.gain);
  g.params["metric"] = std::string(to_string(metric));
  g.params["clustering"] = spec.describe();

  for (std::size_t c = 0; c < n_cubes; ++c) {
    std::size_t ordinal = 0;
    auto emit = [&](std::vector<Index> members) {
      Vertex v;
      v.id = std::to_string(c) + "." + std::to_string(ordinal++);
      v.members = std::move(members);
      g.vertices.push_back(std::move(v));
    };
    for (auto& cl : per_cube[c].clusters) emit(std::move(cl));
    for (Index p : per_cube[c].noise) emit({p});
  }
  g.edges = nerve_edges(g.vertices, g.cloud_size);
  return g;
}

}  // namespace mapperkit
