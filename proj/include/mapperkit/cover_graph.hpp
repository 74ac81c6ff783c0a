#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapperkit/point_cloud.hpp"

namespace mapperkit {

struct Vertex {
  std::string id;
  std::vector<Index> members;  // ascending, non-empty
  std::optional<Index> landmark;
  // Position of the originating ball in the base graph (MoBM only).
  std::optional<std::size_t> origin_ball;
};

/// Undirected edge between vertex positions, source < target.
struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t weight = 0;  // number of shared points

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Output of every pipeline: a one-dimensional nerve of a cover of a cloud.
struct CoverGraph {
  std::string id;
  std::string source_cloud_id;
  Index cloud_size = 0;
  std::map<std::string, std::string> params;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by (source, target)

  std::optional<std::size_t> find_vertex(const std::string& vertex_id) const;
  std::size_t vertex_position(const std::string& vertex_id) const;  // throws UnknownVertex
};

/// Edges of the nerve: (u, v) with weight |members(u) ∩ members(v)| whenever
/// that weight reaches `min_shared`. Computed through a point → vertices
/// index; output is independent of the thread count.
std::vector<Edge> nerve_edges(const std::vector<Vertex>& vertices, Index cloud_size,
                              std::size_t min_shared = 1);

std::vector<std::size_t> degrees(const CoverGraph& graph);

/// Component label per vertex, labels numbered in order of first vertex.
std::vector<std::size_t> component_labels(const CoverGraph& graph);
std::size_t component_count(const CoverGraph& graph);
std::size_t isolated_vertex_count(const CoverGraph& graph);

/// Connected, every vertex of degree 2, |E| == |V|.
bool is_single_cycle(const CoverGraph& graph);

/// Every index 0..cloud_size-1 lies in at least one vertex.
bool covers_cloud(const CoverGraph& graph);

/// Structural equality (ids, members, landmarks, edges, params).
bool same_graph(const CoverGraph& a, const CoverGraph& b);

/// Replaces vertex ids in order. Ids must be unique and non-empty.
void rename_vertices(CoverGraph& graph, const std::vector<std::string>& ids);

/// Formats a real for parameter records so that it parses back exactly.
std::string format_param(double value);

}  // namespace mapperkit
