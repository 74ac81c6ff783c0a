#include "mapperkit/sweep.hpp"

namespace mapperkit {

SweepRow summarize(const CoverGraph& graph, double epsilon, std::optional<std::uint64_t> seed) {
  SweepRow row;
  row.epsilon = epsilon;
  row.seed = seed;
  row.vertices = graph.vertices.size();
  row.edges = graph.edges.size();
  row.components = component_count(graph);
  row.isolated = isolated_vertex_count(graph);
  return row;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,seed,vertices,edges,components,isolated\n";
  for (const auto& r : rows) {
    out += format_param(r.epsilon) + "," + (r.seed ? std::to_string(*r.seed) : "identity") + "," +
           std::to_string(r.vertices) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.components) + "," + std::to_string(r.isolated) + "\n";
  }
  return out;
}

}  // namespace mapperkit
