#include "mapperkit/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "mapperkit/error.hpp"
#include "mapperkit/mapping_mappers.hpp"

namespace mapperkit {

using nlohmann::json;

void GraphStore::add_graph(const std::string& name, GraphDocument doc) {
  graphs_.insert_or_assign(name, std::move(doc));
}

void GraphStore::add_relation(const std::string& name, Relation rel) {
  relations_.insert_or_assign(name, std::move(rel));
}

const GraphDocument* GraphStore::graph(const std::string& name) const {
  auto it = graphs_.find(name);
  return it == graphs_.end() ? nullptr : &it->second;
}

const Relation* GraphStore::relation(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

namespace {

Response error_response(int status, std::string_view code, const std::string& message,
                        json extra = json::object()) {
  extra["error"] = code;
  extra["message"] = message;
  return {status, extra.dump() + "\n"};
}

Response ok(const json& j) { return {200, j.dump(1) + "\n"}; }

}  // namespace

Response Service::list_graphs() const {
  json out = json::array();
  for (const auto& [name, doc] : store_.graphs()) {
    out.push_back({{"id", name},
                   {"graph_id", doc.graph.id},
                   {"source_cloud_id", doc.graph.source_cloud_id},
                   {"vertices", doc.graph.vertices.size()},
                   {"edges", doc.graph.edges.size()},
                   {"params", doc.graph.params}});
  }
  return ok(out);
}

Response Service::get_graph(const std::string& name, bool full) const {
  const GraphDocument* doc = store_.graph(name);
  if (!doc) return error_response(404, "UnknownGraph", "no graph '" + name + "'");
  return {200, export_json(*doc, full ? MemberPolicy::Full : MemberPolicy::Slim)};
}

Response Service::get_colorings(const std::string& name) const {
  const GraphDocument* doc = store_.graph(name);
  if (!doc) return error_response(404, "UnknownGraph", "no graph '" + name + "'");
  json cols = json::array();
  for (const auto& c : doc->colorings) cols.push_back(c.column);
  return ok({{"id", name}, {"colorings", cols}});
}

Response Service::list_relations() const {
  json out = json::array();
  for (const auto& [name, rel] : store_.relations()) {
    out.push_back({{"id", name},
                   {"domain_cloud_id", rel.domain_id},
                   {"codomain_cloud_id", rel.codomain_id},
                   {"pairs", rel.pairs.size()}});
  }
  return ok(out);
}

Response Service::map_selection(const std::string& body) const {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::exception& e) {
    return error_response(400, "MalformedRequest", e.what());
  }
  if (!req.is_object()) return error_response(400, "MalformedRequest", "body must be an object");
  for (const char* key : {"domain-graph", "codomain-graph", "relation"}) {
    if (!req.contains(key) || !req[key].is_string()) {
      return error_response(400, "MalformedRequest", std::string("missing string field '") + key + "'");
    }
  }
  if (!req.contains("selected-vertices") || !req["selected-vertices"].is_array()) {
    return error_response(400, "MalformedRequest", "'selected-vertices' must be an array");
  }
  std::vector<std::string> selection;
  for (const auto& v : req["selected-vertices"]) {
    if (!v.is_string()) {
      return error_response(400, "MalformedRequest", "vertex ids must be strings");
    }
    selection.push_back(v.get<std::string>());
  }

  const auto domain_name = req["domain-graph"].get<std::string>();
  const auto codomain_name = req["codomain-graph"].get<std::string>();
  const auto relation_name = req["relation"].get<std::string>();
  const GraphDocument* domain = store_.graph(domain_name);
  const GraphDocument* codomain = store_.graph(codomain_name);
  const Relation* rel = store_.relation(relation_name);
  if (!domain) return error_response(404, "UnknownGraph", "no graph '" + domain_name + "'");
  if (!codomain) return error_response(404, "UnknownGraph", "no graph '" + codomain_name + "'");
  if (!rel) return error_response(404, "UnknownRelation", "no relation '" + relation_name + "'");

  json unknown = json::array();
  for (const auto& id : selection) {
    if (!domain->graph.find_vertex(id)) unknown.push_back(id);
  }
  if (!unknown.empty()) {
    return error_response(400, "UnknownVertex", "selection names vertices not in " + domain_name,
                          {{"unknown_vertices", unknown}});
  }

  try {
    const SelectionColoring sc = mapperkit::map_selection(domain->graph, codomain->graph, *rel, selection);
    json fractions = json::object();
    json counts = json::object();
    for (std::size_t w = 0; w < sc.fractions.size(); ++w) {
      const auto& id = codomain->graph.vertices[w].id;
      fractions[id] = round_fraction(sc.fractions[w].value());
      counts[id] = {sc.fractions[w].reached, sc.fractions[w].total};
    }
    return ok({{"domain-graph", domain_name},
               {"codomain-graph", codomain_name},
               {"relation", relation_name},
               {"selection", sc.selection},
               {"fractions", fractions},
               {"counts", counts}});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GraphCloudMismatch) {
      return error_response(409, to_string(e.code()), e.what());
    }
    return error_response(400, to_string(e.code()), e.what());
  }
}

struct HttpServer::Impl {
  const Service& service;
  httplib::Server server;
  explicit Impl(const Service& s) : service(s) {}
};

HttpServer::HttpServer(const Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  const Service& svc = service;
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  };
  srv.Get("/graphs", [&svc, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.list_graphs());
  });
  srv.Get(R"(/graphs/([^/]+)/colorings)",
          [&svc, reply](const httplib::Request& req, httplib::Response& res) {
            reply(res, svc.get_colorings(req.matches[1]));
          });
  srv.Get(R"(/graphs/([^/]+))", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    const bool full = req.has_param("full") && req.get_param_value("full") != "0";
    reply(res, svc.get_graph(req.matches[1], full));
  });
  srv.Get("/relations", [&svc, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.list_relations());
  });
  srv.Post("/map-selection", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.map_selection(req.body));
  });
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace mapperkit
