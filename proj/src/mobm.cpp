#include "mapperkit/mobm.hpp"

namespace mapperkit {

std::map<std::string, std::size_t> cluster_split_counts(const CoverGraph& mobm,
                                                        const CoverGraph& base) {
  auto it = mobm.params.find("base_graph");
  if (it == mobm.params.end() || it->second != base.id) {
    throw Error(ErrorCode::ProvenanceMismatch,
                "graph " + mobm.id + " was not built on base graph " + base.id);
  }
  std::vector<std::size_t> counts(base.vertices.size(), 0);
  for (const auto& v : mobm.vertices) {
    if (!v.origin_ball || *v.origin_ball >= base.vertices.size()) {
      throw Error(ErrorCode::ProvenanceMismatch, "vertex " + v.id + " has no originating ball");
    }
    ++counts[*v.origin_ball];
  }
  std::map<std::string, std::size_t> out;
  for (std::size_t b = 0; b < base.vertices.size(); ++b) out[base.vertices[b].id] = counts[b];
  return out;
}

}  // namespace mapperkit
