#include "mapperkit/graph_io.hpp"

#include <json.hpp>

#include "mapperkit/error.hpp"

namespace mapperkit {

using nlohmann::json;

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept {
  if (name == "json") return ExportFormat::Json;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "csv-matrix" || name == "csv") return ExportFormat::CsvMatrix;
  return std::nullopt;
}

bool include_members(const CoverGraph& graph, MemberPolicy policy) {
  if (policy != MemberPolicy::Auto) return policy == MemberPolicy::Full;
  std::size_t covered = 0;
  for (const auto& v : graph.vertices) covered += v.members.size();
  return covered <= kSlimThreshold;
}

std::string export_json(const GraphDocument& doc, MemberPolicy policy) {
  const CoverGraph& g = doc.graph;
  for (const auto& c : doc.colorings) {
    if (c.values.size() != g.vertices.size() || c.variation.size() != g.vertices.size()) {
      throw Error(ErrorCode::GraphCloudMismatch, "coloring '" + c.column + "' does not belong to " + g.id);
    }
  }
  const bool members = include_members(g, policy);

  json nodes = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Vertex& vx = g.vertices[v];
    json node;
    node["id"] = vx.id;
    node["size"] = vx.members.size();
    if (vx.landmark) node["landmark"] = *vx.landmark;
    if (vx.origin_ball) node["origin_ball"] = *vx.origin_ball;
    if (members) node["covered"] = vx.members;
    json colors = json::object();
    for (const auto& c : doc.colorings) {
      colors[c.column] = {{"mean", c.values[v]}, {"variation", c.variation[v]}};
    }
    node["colors"] = std::move(colors);
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"source", g.vertices[e.source].id},
                     {"target", g.vertices[e.target].id},
                     {"weight", e.weight}});
  }
  json doc_json;
  doc_json["schema_version"] = kGraphSchemaVersion;
  doc_json["id"] = g.id;
  doc_json["source_cloud_id"] = g.source_cloud_id;
  doc_json["cloud_size"] = g.cloud_size;
  doc_json["params"] = g.params;
  doc_json["members_included"] = members;
  doc_json["nodes"] = std::move(nodes);
  doc_json["edges"] = std::move(edges);
  return doc_json.dump(1) + "\n";
}

GraphDocument import_json(const std::string& text) {
  GraphDocument doc;
  try {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kGraphSchemaVersion) {
      throw Error(ErrorCode::MalformedDocument, "unsupported schema version");
    }
    CoverGraph& g = doc.graph;
    g.id = j.at("id").get<std::string>();
    g.source_cloud_id = j.at("source_cloud_id").get<std::string>();
    g.cloud_size = j.at("cloud_size").get<Index>();
    g.params = j.at("params").get<std::map<std::string, std::string>>();

    std::map<std::string, std::size_t> position;
    std::map<std::string, VertexColoring> colorings;
    const auto& nodes = j.at("nodes");
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      const auto& n = nodes[v];
      Vertex vx;
      vx.id = n.at("id").get<std::string>();
      if (!position.emplace(vx.id, v).second) {
        throw Error(ErrorCode::MalformedDocument, "duplicate vertex id '" + vx.id + "'");
      }
      if (n.contains("landmark")) vx.landmark = n["landmark"].get<Index>();
      if (n.contains("origin_ball")) vx.origin_ball = n["origin_ball"].get<std::size_t>();
      if (n.contains("covered")) vx.members = n["covered"].get<std::vector<Index>>();
      for (const auto& [name, stats] : n.at("colors").items()) {
        auto& c = colorings[name];
        c.graph_id = g.id;
        c.column = name;
        c.values.resize(nodes.size());
        c.variation.resize(nodes.size());
        c.values[v] = stats.at("mean").get<double>();
        c.variation[v] = stats.at("variation").get<double>();
      }
      g.vertices.push_back(std::move(vx));
    }
    for (const auto& e : j.at("edges")) {
      auto s = position.find(e.at("source").get<std::string>());
      auto t = position.find(e.at("target").get<std::string>());
      if (s == position.end() || t == position.end()) {
        throw Error(ErrorCode::MalformedDocument, "edge endpoint is not a vertex");
      }
      g.edges.push_back(Edge{std::min(s->second, t->second), std::max(s->second, t->second),
                             e.at("weight").get<std::size_t>()});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    for (auto& [name, c] : colorings) doc.colorings.push_back(std::move(c));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return doc;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const GraphDocument& doc) {
  const CoverGraph& g = doc.graph;
  std::string out = "graph " + dot_quote(g.id) + " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  " + dot_quote(g.vertices[v].id) + " [size=" +
           std::to_string(g.vertices[v].members.size());
    for (const auto& c : doc.colorings) {
      out += ", " + dot_quote(c.column) + "=" + dot_quote(format_param(c.values[v]));
    }
    out += "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  " + dot_quote(g.vertices[e.source].id) + " -- " + dot_quote(g.vertices[e.target].id) +
           " [weight=" + std::to_string(e.weight) + "];\n";
  }
  return out + "}\n";
}

std::string export_adjacency_csv(const CoverGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> w(n * n, 0);
  for (const auto& e : g.edges) {
    w[e.source * n + e.target] = e.weight;
    w[e.target * n + e.source] = e.weight;
  }
  std::string out = "vertex";
  for (const auto& v : g.vertices) out += "," + v.id;
  out += "\n";
  for (std::size_t r = 0; r < n; ++r) {
    out += g.vertices[r].id;
    for (std::size_t c = 0; c < n; ++c) out += "," + std::to_string(w[r * n + c]);
    out += "\n";
  }
  return out;
}

std::string export_document(const GraphDocument& doc, std::string_view format,
                            MemberPolicy policy) {
  auto f = parse_export_format(format);
  if (!f) throw Error(ErrorCode::UnknownFormat, std::string(format));
  switch (*f) {
    case ExportFormat::Json: return export_json(doc, policy);
    case ExportFormat::Dot: return export_dot(doc);
    case ExportFormat::CsvMatrix: return export_adjacency_csv(doc.graph);
  }
  return {};
}

}  // namespace mapperkit
