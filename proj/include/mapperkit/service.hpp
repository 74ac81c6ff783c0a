#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mapperkit/graph_io.hpp"
#include "mapperkit/relation.hpp"

namespace mapperkit {

/// Named graphs and relations served over HTTP. Filled once at startup,
/// read-only afterwards.
class GraphStore {
 public:
  void add_graph(const std::string& name, GraphDocument doc);
  void add_relation(const std::string& name, Relation rel);

  const GraphDocument* graph(const std::string& name) const;
  const Relation* relation(const std::string& name) const;
  const std::map<std::string, GraphDocument>& graphs() const noexcept { return graphs_; }
  const std::map<std::string, Relation>& relations() const noexcept { return relations_; }

 private:
  std::map<std::string, GraphDocument> graphs_;
  std::map<std::string, Relation> relations_;
};

struct Response {
  int status = 200;
  std::string body;
};

/// Request handlers, independent of the transport. Identical store state
/// and request give identical responses.
///
///   GET  /graphs                  ids and params
///   GET  /graphs/{id}[?full=1]    graph document, member lists only if full
///   GET  /graphs/{id}/colorings   available coloring columns
///   GET  /relations               ids, endpoints and pair counts
///   POST /map-selection           {"domain-graph", "codomain-graph",
///                                  "relation", "selected-vertices": [...]}
class Service {
 public:
  explicit Service(GraphStore store) : store_(std::move(store)) {}

  Response list_graphs() const;
  Response get_graph(const std::string& name, bool full) const;
  Response get_colorings(const std::string& name) const;
  Response list_relations() const;
  Response map_selection(const std::string& body) const;

  const GraphStore& store() const noexcept { return store_; }

 private:
  GraphStore store_;
};

/// cpp-httplib front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port, -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mapperkit
