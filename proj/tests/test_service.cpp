#include <doctest.h>

#include <thread>

#include "mapperkit/service.hpp"
#include "oracles.hpp"

// after Eigen: <resolv.h> defines a _res macro
#include <httplib.h>
#include <json.hpp>

using namespace mapperkit;
using nlohmann::json;

namespace {

Service toy_service() {
  const auto x = oracle::line_cloud({0, 0.1, 0.2, 10, 10.1, 10.2, 20, 20.1, 20.2, 30, 30.1, 30.2}, "x");
  const auto y = oracle::line_cloud({0, 0.1, 10, 10.1, 20, 20.1}, "y");
  auto gx = build_ball_mapper(x, Metric::Euclidean, greedy_net(x, Metric::Euclidean, 1.0));
  auto gy = build_ball_mapper(y, Metric::Euclidean, greedy_net(y, Metric::Euclidean, 1.0));
  rename_vertices(gx, {"A", "B", "C", "D"});
  rename_vertices(gy, {"J", "K", "L"});
  GraphStore store;
  store.add_graph("X", {gx, {}});
  store.add_graph("Y", {gy, {color(gy, y.points().row(0).transpose(), "y0")}});
  store.add_relation("p", make_relation("x", 12, "y", 6,
                                        {{0, 0}, {1, 1}, {2, 0}, {3, 2}, {4, 3}, {5, 2}, {6, 4}, {7, 5}, {8, 4},
                                         {9, 0}, {9, 1}, {10, 2}, {10, 3}, {11, 4}, {11, 5}}));
  store.add_relation("back", make_relation("y", 6, "x", 12, {}));
  return Service(std::move(store));
}

std::string selection(const std::string& rel, const json& ids, const std::string& dom = "X",
                      const std::string& cod = "Y") {
  return json{{"domain-graph", dom}, {"codomain-graph", cod}, {"relation", rel}, {"selected-vertices", ids}}.dump();
}

}  // namespace

TEST_CASE("map-selection handler") {
  const auto svc = toy_service();
  auto r = svc.map_selection(selection("p", {"A"}));
  REQUIRE(r.status == 200);
  auto j = json::parse(r.body);
  CHECK(j["fractions"] == json{{"J", 1.0}, {"K", 0.0}, {"L", 0.0}});
  CHECK(j["counts"]["J"] == json{2, 2});

  j = json::parse(svc.map_selection(selection("p", json::array())).body);
  CHECK(j["fractions"] == json{{"J", 0.0}, {"K", 0.0}, {"L", 0.0}});
  j = json::parse(svc.map_selection(selection("p", {"D"})).body);
  CHECK(j["fractions"] == json{{"J", 1.0}, {"K", 1.0}, {"L", 1.0}});

  CHECK(svc.map_selection(selection("p", {"B", "A"})).body == svc.map_selection(selection("p", {"A", "B"})).body);
}

TEST_CASE("map-selection errors") {
  const auto svc = toy_service();
  auto r = svc.map_selection(selection("p", {"A", "Q"}));
  CHECK(r.status == 400);
  CHECK(json::parse(r.body)["unknown_vertices"] == json{"Q"});
  CHECK(svc.map_selection("{not json").status == 400);
  CHECK(svc.map_selection("[]").status == 400);
  CHECK(svc.map_selection(R"({"domain-graph":"X","codomain-graph":"Y","relation":"p"})").status == 400);
  CHECK(svc.map_selection(selection("p", {1, 2})).status == 400);
  CHECK(svc.map_selection(selection("p", {"A"}, "nope")).status == 404);
  CHECK(svc.map_selection(selection("nope", {"A"})).status == 404);
  CHECK(svc.map_selection(selection("back", {"A"})).status == 409);
}

TEST_CASE("graph listing and documents") {
  const auto svc = toy_service();
  const auto list = json::parse(svc.list_graphs().body);
  REQUIRE(list.size() == 2);
  CHECK(list[0]["id"] == "X");
  CHECK(list[1]["vertices"] == 3);
  const auto slim = json::parse(svc.get_graph("X", false).body);
  CHECK(slim["members_included"] == false);
  CHECK_FALSE(slim["nodes"][0].contains("covered"));
  const auto full = json::parse(svc.get_graph("X", true).body);
  CHECK(full["nodes"][0]["covered"] == json{0, 1, 2});
  CHECK(svc.get_graph("Z", false).status == 404);
  CHECK(json::parse(svc.get_colorings("Y").body)["colorings"] == json{"y0"});
  CHECK(svc.get_colorings("Z").status == 404);
  CHECK(json::parse(svc.list_relations().body).size() == 2);
}

TEST_CASE("HTTP round trip over a local socket") {
  const auto svc = toy_service();
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto graphs = client.Get("/graphs");
  REQUIRE(graphs);
  CHECK(graphs->status == 200);
  CHECK(graphs->body == svc.list_graphs().body);

  auto doc = client.Get("/graphs/X?full=1");
  REQUIRE(doc);
  CHECK(doc->body == svc.get_graph("X", true).body);
  CHECK(client.Get("/graphs/X")->body == svc.get_graph("X", false).body);
  CHECK(client.Get("/graphs/Y/colorings")->status == 200);
  CHECK(client.Get("/graphs/nope")->status == 404);

  const auto body = selection("p", {"A"});
  auto sel = client.Post("/map-selection", body, "application/json");
  REQUIRE(sel);
  CHECK(sel->status == 200);
  CHECK(sel->body == svc.map_selection(body).body);
  CHECK(sel->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(client.Post("/map-selection", selection("p", {"Q"}), "application/json")->status == 400);

  server.stop();
  worker.join();
}
