#include "mapperkit/clustering.hpp"

#include "mapperkit/cover_graph.hpp"

namespace mapperkit {

std::string_view to_string(ClusteringKind kind) noexcept {
  return kind == ClusteringKind::Dbscan ? "dbscan" : "radius";
}

std::optional<ClusteringKind> parse_clustering_kind(std::string_view name) noexcept {
  if (name == "dbscan") return ClusteringKind::Dbscan;
  if (name == "radius" || name == "radius-components") return ClusteringKind::RadiusComponents;
  return std::nullopt;
}

void ClusteringSpec::validate() const {
  if (!(eps_db > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps-db must be positive");
  if (min_pts == 0) throw Error(ErrorCode::InvalidArgument, "min-pts must be positive");
}

std::string ClusteringSpec::describe() const {
  std::string out(to_string(kind));
  out += "(eps_db=" + format_param(eps_db);
  if (kind == ClusteringKind::Dbscan) out += ",min_pts=" + std::to_string(min_pts);
  return out + ")";
}

}  // namespace mapperkit
