#include "mapperkit/ball_mapper.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace mapperkit {

std::string ball_mapper_graph_id(const std::string& cloud_id, bool equivariant, double epsilon,
                                 Metric metric, const std::optional<std::uint64_t>& seed) {
  std::string id = equivariant ? "eqbm/" : "bm/";
  id += cloud_id + "/" + std::string(to_string(metric)) + "/eps=" + format_param(epsilon);
  if (seed) id += "/seed=" + std::to_string(*seed);
  return id;
}

VertexColoring color(const CoverGraph& graph, const Eigen::VectorXd& values,
                     const std::string& column_name) {
  if (static_cast<Index>(values.size()) != graph.cloud_size) {
    throw Error(ErrorCode::GraphCloudMismatch,
                "column '" + column_name + "' has " + std::to_string(values.size()) +
                    " entries, graph covers a cloud of " + std::to_string(graph.cloud_size));
  }
  VertexColoring out;
  out.graph_id = graph.id;
  out.column = column_name;
  out.values.resize(graph.vertices.size());
  out.variation.resize(graph.vertices.size());
  parallel::for_each_index(graph.vertices.size(), [&](std::size_t v) {
    const auto& members = graph.vertices[v].members;
    std::vector<double> xs;
    xs.reserve(members.size());
    for (Index p : members) xs.push_back(values(static_cast<Eigen::Index>(p)));
    std::sort(xs.begin(), xs.end());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double n = static_cast<double>(xs.size());
    const double mean = sum / n;
    for (double& x : xs) x = (x - mean) * (x - mean);
    std::sort(xs.begin(), xs.end());
    double sq = 0.0;
    for (double x : xs) sq += x;
    out.values[v] = mean;
    out.variation[v] = std::sqrt(sq / n);
  });
  return out;
}

std::vector<InducedAutomorphism> induce_action(const CoverGraph& graph,
                                               const GroupAction& action) {
  if (action.n_points() != graph.cloud_size) {
    throw Error(ErrorCode::GraphCloudMismatch, "group acts on " +
                                                   std::to_string(action.n_points()) +
                                                   " points, graph covers " +
                                                   std::to_string(graph.cloud_size));
  }
  std::unordered_map<Index, std::size_t> vertex_of_landmark;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (!graph.vertices[v].landmark) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + graph.vertices[v].id +
                                                  " has no landmark; not a Ball Mapper graph");
    }
    vertex_of_landmark[*graph.vertices[v].landmark] = v;
  }
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (const auto& e : graph.edges) edge_set.emplace(e.source, e.target);

  std::vector<InducedAutomorphism> out;
  out.reserve(action.order());
  for (std::size_t g = 0; g < action.order(); ++g) {
    const Permutation& perm = action.elements()[g];
    InducedAutomorphism aut;
    aut.element = g;
    aut.vertex_map.resize(graph.vertices.size());
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      const Index image = perm[*graph.vertices[v].landmark];
      auto it = vertex_of_landmark.find(image);
      if (it == vertex_of_landmark.end()) {
        throw Error(ErrorCode::CoveringConditionViolated,
                    "element " + std::to_string(g) + " maps landmark " +
                        std::to_string(*graph.vertices[v].landmark) + " to non-landmark " +
                        std::to_string(image));
      }
      std::vector<Index> moved;
      moved.reserve(graph.vertices[v].members.size());
      for (Index p : graph.vertices[v].members) moved.push_back(perm[p]);
      std::sort(moved.begin(), moved.end());
      if (moved != graph.vertices[it->second].members) {
        throw Error(ErrorCode::CoveringConditionViolated,
                    "element " + std::to_string(g) + ": image of ball " +
                        graph.vertices[v].id + " is not ball " + graph.vertices[it->second].id);
      }
      aut.vertex_map[v] = it->second;
    }
    for (const auto& e : graph.edges) {
      auto a = aut.vertex_map[e.source], b = aut.vertex_map[e.target];
      if (!edge_set.count({std::min(a, b), std::max(a, b)})) {
        throw Error(ErrorCode::CoveringConditionViolated,
                    "element " + std::to_string(g) + " does not preserve edge (" +
                        graph.vertices[e.source].id + ", " + graph.vertices[e.target].id + ")");
      }
    }
    out.push_back(std::move(aut));
  }
  return out;
}

}  // namespace mapperkit
