#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapperkit/ball_mapper.hpp"
#include "mapperkit/group_action.hpp"
#include "mapperkit/nets.hpp"

namespace mapperkit {

struct SweepRow {
  double epsilon = 0.0;
  std::optional<std::uint64_t> seed;  // absent: identity scan order
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t isolated = 0;
};

SweepRow summarize(const CoverGraph& graph, double epsilon, std::optional<std::uint64_t> seed);

/// Builds a (possibly equivariant) Ball Mapper graph for every pair of
/// radius and scan-order seed and records its stability diagnostics.
template <typename Scalar>
std::vector<SweepRow> sweep(const PointCloud<Scalar>& cloud, Metric metric,
                            const std::vector<Scalar>& epsilons,
                            const std::vector<std::optional<std::uint64_t>>& seeds,
                            const GroupAction* action = nullptr, std::size_t min_shared = 1) {
  if (epsilons.empty()) throw Error(ErrorCode::InvalidArgument, "epsilon list is empty");
  std::vector<std::optional<std::uint64_t>> orders = seeds;
  if (orders.empty()) orders.push_back(std::nullopt);
  std::vector<SweepRow> rows;
  for (Scalar eps : epsilons) {
    for (const auto& seed : orders) {
      const ScanOrder order = ScanOrder::from_seed(cloud.size(), seed);
      const auto net = action ? equivariant_net(cloud, metric, eps, *action, order)
                              : greedy_net(cloud, metric, eps, order);
      rows.push_back(summarize(build_ball_mapper(cloud, metric, net, min_shared),
                               static_cast<double>(eps), seed));
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace mapperkit
