#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapperkit/ball_mapper.hpp"
#include "mapperkit/clustering.hpp"
#include "mapperkit/cover_graph.hpp"
#include "mapperkit/nets.hpp"
#include "mapperkit/relation.hpp"

namespace mapperkit {

namespace detail {

template <typename ScalarX, typename ScalarY>
void check_relation_links(const PointCloud<ScalarX>& x, const PointCloud<ScalarY>& y,
                          const Relation& rel) {
  if (rel.domain_id != x.id() || rel.domain_size != x.size() || rel.codomain_id != y.id() ||
      rel.codomain_size != y.size()) {
    throw Error(ErrorCode::GraphCloudMismatch, "relation " + rel.domain_id + " -> " +
                                                   rel.codomain_id + " does not link " + x.id() +
                                                   " to " + y.id());
  }
}

}  // namespace detail

/// Ball Mapper of the image of `rel` inside Y. Only image points are
/// scanned and covered; vertex members are Y indices. `order` is a
/// permutation of all Y indices, filtered to the image.
template <typename Scalar>
CoverGraph build_image_ball_mapper(const PointCloud<Scalar>& y, const Relation& rel,
                                   Metric metric, Scalar epsilon, const ScanOrder& order,
                                   std::size_t min_shared = 1) {
  if (rel.codomain_id != y.id() || rel.codomain_size != y.size()) {
    throw Error(ErrorCode::GraphCloudMismatch, "relation codomain is not " + y.id());
  }
  if (!is_permutation_of_range(order.permutation, y.size())) {
    throw Error(ErrorCode::InvalidOrder, "scan order is not a permutation of the codomain");
  }
  const std::vector<Index> image = rel.image();
  if (image.empty()) throw Error(ErrorCode::EmptyImage, "relation hits no codomain point");

  std::vector<Index> position(y.size(), static_cast<Index>(-1));
  typename PointCloud<Scalar>::Matrix pts(y.dim(), image.size());
  for (Index k = 0; k < image.size(); ++k) {
    position[image[k]] = k;
    pts.col(static_cast<Eigen::Index>(k)) = y.point(image[k]);
  }
  PointCloud<Scalar> sub(y.id() + "[image]", std::move(pts));
  ScanOrder sub_order;
  sub_order.seed = order.seed;
  for (Index j : order.permutation) {
    if (position[j] != static_cast<Index>(-1)) sub_order.permutation.push_back(position[j]);
  }

  const auto net = greedy_net(sub, metric, epsilon, sub_order);
  CoverGraph g = build_ball_mapper(sub, metric, net, min_shared);
  for (auto& v : g.vertices) {
    v.landmark = image[*v.landmark];
    for (Index& m : v.members) m = image[m];
  }
  g.source_cloud_id = y.id();
  g.cloud_size = y.size();
  g.id = "bm-image/" + rel.domain_id + "->" + y.id() + "/" + std::string(to_string(metric)) +
         "/eps=" + format_param(static_cast<double>(epsilon)) +
         (order.seed ? "/seed=" + std::to_string(*order.seed) : "");
  g.params["restricted_to"] = "image of " + rel.domain_id;
  return g;
}

/// Mapper on Ball Mapper over a precomputed Ball Mapper of the image.
/// Each ball's preimage under `rel` is clustered in X; clusters become
/// vertices "<ball id>.<ordinal>" and edges join vertices sharing X points.
template <typename ScalarX, typename ScalarY>
CoverGraph build_mobm(const PointCloud<ScalarX>& x, const PointCloud<ScalarY>& y,
                      const Relation& rel, const CoverGraph& base, Metric metric_x,
                      const ClusteringSpec& spec, std::size_t min_shared = 1) {
  detail::check_relation_links(x, y, rel);
  spec.validate();
  if (base.source_cloud_id != y.id() || base.cloud_size != y.size()) {
    throw Error(ErrorCode::ProvenanceMismatch, "base graph " + base.id + " is not over " + y.id());
  }
  const auto back = rel.backward();
  std::vector<Clustering> per_ball(base.vertices.size());
  parallel::for_each_index(base.vertices.size(), [&](std::size_t b) {
    std::vector<Index> preimage;
    for (Index j : base.vertices[b].members) {
      preimage.insert(preimage.end(), back[j].begin(), back[j].end());
    }
    if (!preimage.empty()) per_ball[b] = cluster(x, std::move(preimage), metric_x, spec);
  });

  CoverGraph g;
  g.source_cloud_id = x.id();
  g.cloud_size = x.size();
  g.id = "mobm/" + x.id() + "/" + base.id + "/" + spec.describe();
  g.params["algorithm"] = "mapper-on-ball-mapper";
  g.params["base_graph"] = base.id;
  g.params["relation"] = rel.domain_id + "->" + rel.codomain_id;
  g.params["metric_x"] = std::string(to_string(metric_x));
  g.params["clustering"] = spec.describe();
  g.params["min_shared"] = std::to_string(min_shared);
  for (const auto& key : {"epsilon", "metric", "order_seed"}) {
    if (auto it = base.params.find(key); it != base.params.end()) {
      g.params[std::string("base_") + key] = it->second;
    }
  }

  for (std::size_t b = 0; b < base.vertices.size(); ++b) {
    std::size_t ordinal = 0;
    auto emit = [&](std::vector<Index> members) {
      Vertex v;
      v.id = base.vertices[b].id + "." + std::to_string(ordinal++);
      v.members = std::move(members);
      v.origin_ball = b;
      g.vertices.push_back(std::move(v));
    };
    for (auto& cl : per_ball[b].clusters) emit(std::move(cl));
    for (Index p : per_ball[b].noise) emit({p});
  }
  g.edges = nerve_edges(g.vertices, g.cloud_size, min_shared);
  return g;
}

/// Builds the image Ball Mapper and the MoBM graph over it.
template <typename ScalarX, typename ScalarY>
CoverGraph build_mobm(const PointCloud<ScalarX>& x, const PointCloud<ScalarY>& y,
                      const Relation& rel, Metric metric_y, ScalarY epsilon, Metric metric_x,
                      const ClusteringSpec& spec, const ScanOrder& order) {
  detail::check_relation_links(x, y, rel);
  const CoverGraph base = build_image_ball_mapper(y, rel, metric_y, epsilon, order);
  return build_mobm(x, y, rel, base, metric_x, spec);
}

/// Number of MoBM vertices produced by each ball of the base graph, keyed
/// by base vertex id.
std::map<std::string, std::size_t> cluster_split_counts(const CoverGraph& mobm,
                                                        const CoverGraph& base);

}  // namespace mapperkit
