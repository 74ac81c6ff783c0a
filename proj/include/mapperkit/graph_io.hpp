#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapperkit/ball_mapper.hpp"
#include "mapperkit/cover_graph.hpp"

namespace mapperkit {

inline constexpr int kGraphSchemaVersion = 1;

/// Graphs with more covered points than this are exported without member
/// lists unless the full export is requested.
inline constexpr std::size_t kSlimThreshold = 50000;

enum class ExportFormat { Json, Dot, CsvMatrix };
std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;

enum class MemberPolicy { Auto, Full, Slim };

/// A graph with the colorings computed on it.
struct GraphDocument {
  CoverGraph graph;
  std::vector<VertexColoring> colorings;
};

bool include_members(const CoverGraph& graph, MemberPolicy policy);

/// Sorted keys, shortest round-trip reals: identical graphs give identical
/// bytes, and import_json(export_json(g)) reproduces g exactly when the
/// member lists are included.
std::string export_json(const GraphDocument& doc, MemberPolicy policy = MemberPolicy::Auto);
GraphDocument import_json(const std::string& text);

std::string export_dot(const GraphDocument& doc);

/// Weighted adjacency matrix with vertex ids as row and column headers.
std::string export_adjacency_csv(const CoverGraph& graph);

std::string export_document(const GraphDocument& doc, std::string_view format,
                            MemberPolicy policy = MemberPolicy::Auto);

}  // namespace mapperkit
