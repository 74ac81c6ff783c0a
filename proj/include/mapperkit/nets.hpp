#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapperkit/error.hpp"
#include "mapperkit/group_action.hpp"
#include "mapperkit/metric.hpp"
#include "mapperkit/ordering.hpp"
#include "mapperkit/parallel.hpp"
#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

/// Landmarks of an epsilon-net, in insertion order.
template <typename Scalar = double>
struct EpsNet {
  std::vector<Index> landmarks;
  Scalar epsilon{};
  Metric metric = Metric::Euclidean;
  std::optional<std::uint64_t> order_seed;
  std::string cloud_id;
  Index cloud_size = 0;
  bool equivariant = false;
};

namespace detail {

template <typename Scalar>
void validate_net_inputs(const PointCloud<Scalar>& cloud, Scalar epsilon, const ScanOrder& order) {
  if (!(epsilon > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (!is_permutation_of_range(order.permutation, cloud.size())) {
    throw Error(ErrorCode::InvalidOrder, "scan order is not a permutation of 0.." +
                                             std::to_string(cloud.size()) + "-1");
  }
}

// Marks every point within the closed ball around `center`.
template <typename Scalar>
void mark_ball(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon, Index center,
               std::vector<char>& covered) {
  const auto c = cloud.point(center);
  parallel::for_each_index(cloud.size(), [&](Index i) {
    if (!covered[i] && distance(metric, cloud.point(i), c) <= epsilon) covered[i] = 1;
  });
}

template <typename Scalar>
EpsNet<Scalar> scan_net(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon,
                        const ScanOrder& order, const GroupAction* action) {
  validate_net_inputs(cloud, epsilon, order);
  EpsNet<Scalar> net;
  net.epsilon = epsilon;
  net.metric = metric;
  net.order_seed = order.seed;
  net.cloud_id = cloud.id();
  net.cloud_size = cloud.size();
  net.equivariant = action != nullptr;

  // A point is uncovered iff it lies farther than epsilon from every
  // landmark so far, so the flag array reproduces the serial decisions.
  std::vector<char> covered(cloud.size(), 0);
  std::vector<char> is_landmark(cloud.size(), 0);
  auto add = [&](Index l) {
    if (is_landmark[l]) return;
    is_landmark[l] = 1;
    net.landmarks.push_back(l);
    mark_ball(cloud, metric, epsilon, l, covered);
  };

  for (Index x : order.permutation) {
    if (covered[x]) continue;
    add(x);
    if (action != nullptr) {
      for (Index y : action->orbit(x).members) add(y);
    }
  }
  return net;
}

}  // namespace detail

/// Greedy epsilon-net: scans `order` and keeps every point that is farther
/// than epsilon from all landmarks kept so far. Balls are closed.
template <typename Scalar>
EpsNet<Scalar> greedy_net(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon,
                          const ScanOrder& order) {
  return detail::scan_net(cloud, metric, epsilon, order, nullptr);
}

template <typename Scalar>
EpsNet<Scalar> greedy_net(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon) {
  return greedy_net(cloud, metric, epsilon, ScanOrder::identity(cloud.size()));
}

/// Equivariant greedy epsilon-net: whenever an uncovered point is found its
/// whole orbit joins the net (the point first, then the rest ascending).
/// The result is a union of orbits, hence invariant under the action.
template <typename Scalar>
EpsNet<Scalar> equivariant_net(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon,
                               const GroupAction& action, const ScanOrder& order) {
  if (action.n_points() != cloud.size()) {
    throw Error(ErrorCode::InvalidArgument, "group action acts on " +
                                                std::to_string(action.n_points()) +
                                                " points, cloud has " +
                                                std::to_string(cloud.size()));
  }
  return detail::scan_net(cloud, metric, epsilon, order, &action);
}

template <typename Scalar>
EpsNet<Scalar> equivariant_net(const PointCloud<Scalar>& cloud, Metric metric, Scalar epsilon,
                               const GroupAction& action) {
  return equivariant_net(cloud, metric, epsilon, action, ScanOrder::identity(cloud.size()));
}

}  // namespace mapperkit
