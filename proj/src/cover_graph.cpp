#include "mapperkit/cover_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mapperkit/error.hpp"
#include "mapperkit/parallel.hpp"

namespace mapperkit {

std::optional<std::size_t> CoverGraph::find_vertex(const std::string& vertex_id) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].id == vertex_id) return v;
  }
  return std::nullopt;
}

std::size_t CoverGraph::vertex_position(const std::string& vertex_id) const {
  if (auto v = find_vertex(vertex_id)) return *v;
  throw Error(ErrorCode::UnknownVertex, "vertex '" + vertex_id + "' not in graph " + id);
}

std::vector<Edge> nerve_edges(const std::vector<Vertex>& vertices, Index cloud_size,
                              std::size_t min_shared) {
  if (min_shared == 0) throw Error(ErrorCode::InvalidArgument, "min-shared must be positive");
  std::vector<std::vector<std::size_t>> owners(cloud_size);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (Index p : vertices[v].members) {
      if (p >= cloud_size) {
        throw Error(ErrorCode::InvalidArgument, "vertex " + vertices[v].id +
                                                    " covers out-of-range index " +
                                                    std::to_string(p));
      }
      owners[p].push_back(v);
    }
  }

  // Row u collects every v > u sharing a point with u.
  std::vector<std::vector<Edge>> rows(vertices.size());
  parallel::for_each_index(vertices.size(), [&](std::size_t u) {
    std::map<std::size_t, std::size_t> shared;
    for (Index p : vertices[u].members) {
      for (std::size_t v : owners[p]) {
        if (v > u) ++shared[v];
      }
    }
    for (const auto& [v, w] : shared) {
      if (w >= min_shared) rows[u].push_back(Edge{u, v, w});
    }
  });

  std::vector<Edge> edges;
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return edges;
}

std::vector<std::size_t> degrees(const CoverGraph& graph) {
  std::vector<std::size_t> deg(graph.vertices.size(), 0);
  for (const auto& e : graph.edges) {
    ++deg[e.source];
    ++deg[e.target];
  }
  return deg;
}

std::vector<std::size_t> component_labels(const CoverGraph& graph) {
  const std::size_t n = graph.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges) {
    std::size_t a = find(e.source), b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n);
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = relabel.emplace(find(v), relabel.size());
    label[v] = it->second;
  }
  return label;
}

std::size_t component_count(const CoverGraph& graph) {
  auto labels = component_labels(graph);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::size_t isolated_vertex_count(const CoverGraph& graph) {
  auto deg = degrees(graph);
  return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), std::size_t{0}));
}

bool is_single_cycle(const CoverGraph& graph) {
  if (graph.vertices.size() < 3 || graph.edges.size() != graph.vertices.size()) return false;
  auto deg = degrees(graph);
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d != 2; })) return false;
  return component_count(graph) == 1;
}

bool covers_cloud(const CoverGraph& graph) {
  std::vector<char> hit(graph.cloud_size, 0);
  for (const auto& v : graph.vertices) {
    for (Index p : v.members) {
      if (p < hit.size()) hit[p] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void rename_vertices(CoverGraph& graph, const std::vector<std::string>& ids) {
  if (ids.size() != graph.vertices.size()) {
    throw Error(ErrorCode::DimensionMismatch, "need one id per vertex");
  }
  std::vector<std::string> sorted(ids);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "vertex ids must be unique");
  }
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (ids[v].empty()) throw Error(ErrorCode::InvalidArgument, "vertex ids must be non-empty");
    graph.vertices[v].id = ids[v];
  }
}

bool same_graph(const CoverGraph& a, const CoverGraph& b) {
  if (a.id != b.id || a.source_cloud_id != b.source_cloud_id || a.cloud_size != b.cloud_size ||
      a.params != b.params || a.edges != b.edges || a.vertices.size() != b.vertices.size()) {
    return false;
  }
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    const auto& x = a.vertices[v];
    const auto& y = b.vertices[v];
    if (x.id != y.id || x.members != y.members || x.landmark != y.landmark ||
        x.origin_ball != y.origin_ball) {
      return false;
    }
  }
  return true;
}

std::string format_param(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace mapperkit
