#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "mapperkit/cover_graph.hpp"
#include "mapperkit/error.hpp"
#include "mapperkit/group_action.hpp"
#include "mapperkit/metric.hpp"
#include "mapperkit/nets.hpp"
#include "mapperkit/parallel.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

/// Mean and population standard deviation of a point column over the
/// members of each vertex, indexed by vertex position.
struct VertexColoring {
  std::string graph_id;
  std::string column;
  std::vector<double> values;
  std::vector<double> variation;
};

/// Graph automorphism induced by one group element: vertex_map[v] is the
/// position of the vertex whose ball is the image of v's ball.
struct InducedAutomorphism {
  std::size_t element = 0;
  std::vector<std::size_t> vertex_map;
};

/// Closed-ball members of `center`, ascending.
template <typename Scalar>
std::vector<Index> ball_members(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon,
                                Index center) {
  std::vector<Index> members;
  const auto c = cloud.point(center);
  for (Index i = 0; i < cloud.size(); ++i) {
    if (distance(metric, cloud.point(i), c) <= epsilon) members.push_back(i);
  }
  return members;
}

std::string ball_mapper_graph_id(const std::string& cloud_id, bool equivariant, double epsilon,
                                 Metric metric, const std::optional<std::uint64_t>& seed);

/// One vertex per landmark covering its closed epsilon-ball, edges between
/// balls sharing at least `min_shared` points. Vertex ids are the landmark
/// ordinals "0", "1", ... in net insertion order.
template <typename Scalar>
CoverGraph build_ball_mapper(const PointCloud<Scalar>& cloud, Metric metric,
                             const EpsNet<Scalar>& net, std::size_t min_shared = 1) {
  if (net.cloud_id != cloud.id() || net.cloud_size != cloud.size()) {
    throw Error(ErrorCode::StaleNet, "net was built on cloud '" + net.cloud_id + "' (" +
                                         std::to_string(net.cloud_size) + " points), not '" +
                                         cloud.id() + "'");
  }
  if (net.metric != metric) {
    throw Error(ErrorCode::StaleNet, "net was built with metric " +
                                         std::string(to_string(net.metric)));
  }

  CoverGraph g;
  g.source_cloud_id = cloud.id();
  g.cloud_size = cloud.size();
  g.id = ball_mapper_graph_id(cloud.id(), net.equivariant, static_cast<double>(net.epsilon),
                              metric, net.order_seed);
  g.params["algorithm"] = net.equivariant ? "equivariant-ball-mapper" : "ball-mapper";
  g.params["epsilon"] = format_param(static_cast<double>(net.epsilon));
  g.params["metric"] = std::string(to_string(metric));
  g.params["order_seed"] = net.order_seed ? std::to_string(*net.order_seed) : "identity";
  g.params["min_shared"] = std::to_string(min_shared);

  g.vertices.resize(net.landmarks.size());
  parallel::for_each_index(net.landmarks.size(), [&](std::size_t v) {
    const Index l = net.landmarks[v];
    g.vertices[v].id = std::to_string(v);
    g.vertices[v].landmark = l;
    g.vertices[v].members = ball_members(cloud, metric, net.epsilon, l);
  });
  g.edges = nerve_edges(g.vertices, g.cloud_size, min_shared);
  return g;
}

/// Induced function: per-vertex mean of `values` over the covered points.
/// Sums run over sorted values so the result depends only on the multiset
/// of covered values, never on index order.
VertexColoring color(const CoverGraph& graph, const Eigen::VectorXd& values,
                     const std::string& column_name);

template <typename Scalar>
VertexColoring color(const CoverGraph& graph, const PointCloud<Scalar>& cloud,
                     const std::string& column) {
  if (graph.cloud_size != cloud.size() || graph.source_cloud_id != cloud.id()) {
    throw Error(ErrorCode::GraphCloudMismatch,
                "graph " + graph.id + " was not built on cloud " + cloud.id());
  }
  return color(graph, cloud.column(column), column);
}

/// For each group element g, the vertex map v(l) -> v(g(l)). Throws
/// CoveringConditionViolated if some g(l) is not a landmark, if the image
/// ball does not cover exactly g(ball), or if an edge is not preserved.
std::vector<InducedAutomorphism> induce_action(const CoverGraph& graph, const GroupAction& action);

}  // namespace mapperkit
