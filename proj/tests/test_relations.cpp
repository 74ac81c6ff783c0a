#include <doctest.h>

#include <random>

#include "mapperkit/ball_mapper.hpp"
#include "mapperkit/csv.hpp"
#include "mapperkit/graph_io.hpp"
#include "mapperkit/mapping_mappers.hpp"
#include "oracles.hpp"

using namespace mapperkit;

namespace {

struct Toy {
  CoverGraph gx, gy;
  Relation rel;
};

Toy toy_fixture() {
  const auto x = oracle::line_cloud({0, 0.1, 0.2, 10, 10.1, 10.2, 20, 20.1, 20.2, 30, 30.1, 30.2}, "x");
  const auto y = oracle::line_cloud({0, 0.1, 10, 10.1, 20, 20.1}, "y");
  Toy f;
  f.gx = build_ball_mapper(x, Metric::Euclidean, greedy_net(x, Metric::Euclidean, 1.0));
  f.gy = build_ball_mapper(y, Metric::Euclidean, greedy_net(y, Metric::Euclidean, 1.0));
  rename_vertices(f.gx, {"A", "B", "C", "D"});
  rename_vertices(f.gy, {"J", "K", "L"});
  f.rel = make_relation("x", 12, "y", 6,
                        {{0, 0}, {1, 1}, {2, 0}, {3, 2}, {4, 3}, {5, 2}, {6, 4}, {7, 5}, {8, 4},
                         {9, 0}, {9, 1}, {10, 2}, {10, 3}, {11, 4}, {11, 5}});
  return f;
}

std::vector<double> values(const SelectionColoring& s) {
  std::vector<double> out;
  for (const auto& f : s.fractions) out.push_back(f.value());
  return out;
}

}  // namespace

TEST_CASE("relation basics") {
  const auto r = make_relation("a", 3, "b", 2, {{2, 1}, {0, 0}, {2, 1}, {0, 1}});
  CHECK(r.pairs == std::vector<std::pair<Index, Index>>{{0, 0}, {0, 1}, {2, 1}});
  CHECK(r.domain_coverage() == doctest::Approx(2.0 / 3.0));
  CHECK(r.forward()[0] == std::vector<Index>{0, 1});
  CHECK(r.forward()[1].empty());
  CHECK(r.backward()[1] == std::vector<Index>{0, 2});
  CHECK(r.image() == std::vector<Index>{0, 1});
  CHECK_THROWS_AS(make_relation("a", 3, "b", 2, {{3, 0}}), Error);
  CHECK_THROWS_AS(make_relation("a", 3, "b", 2, {{0, 2}}), Error);
  CHECK(identity_relation("c", 4).domain_coverage() == 1.0);
}

TEST_CASE("relation CSV") {
  const auto r = parse_relation_csv("x,y\n0,1\n2,0\n\n", "a", 3, "b", 2);
  CHECK(r.pairs == std::vector<std::pair<Index, Index>>{{0, 1}, {2, 0}});
  CHECK(parse_relation_csv(relation_to_csv(r), "a", 3, "b", 2).pairs == r.pairs);
  try {
    parse_relation_csv("0,1\n2\n", "a", 3, "b", 2);
    FAIL("ragged relation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RaggedRows);
  }
  try {
    parse_relation_csv("0,1\n2,q\n", "a", 3, "b", 2);
    FAIL("non-numeric relation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonNumericCell);
  }
  CHECK_THROWS_AS(parse_relation_csv("0,7\n", "a", 3, "b", 2), Error);
}

TEST_CASE("relation by key") {
  auto x = oracle::line_cloud({0, 1, 2}, "x");
  auto y = oracle::line_cloud({5, 6}, "y");
  Eigen::VectorXd kx(3), ky(2);
  kx << 7, 8, 7;
  ky << 7, 9;
  x.add_column("key", kx);
  y.add_column("key", ky);
  CHECK(relation_by_key(x, y, "key").pairs == std::vector<std::pair<Index, Index>>{{0, 0}, {2, 0}});
  CHECK_THROWS_AS(relation_by_key(x, y, "nope"), Error);
}

TEST_CASE("toy instance with a partial relation") {
  const auto f = toy_fixture();
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {"A"})) == std::vector<double>{1, 0, 0});
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {"B"})) == std::vector<double>{0, 1, 0});
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {"C"})) == std::vector<double>{0, 0, 1});
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {"D"})) == std::vector<double>{1, 1, 1});
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {})) == std::vector<double>{0, 0, 0});
  CHECK(values(map_selection(f.gx, f.gy, f.rel, {"A", "B", "C", "D"})) == std::vector<double>{1, 1, 1});

  const auto m = full_matrix(f.gx, f.gy, f.rel);
  CHECK(m.row_ids == std::vector<std::string>{"A", "B", "C", "D"});
  CHECK(m.column_ids == std::vector<std::string>{"J", "K", "L"});
  CHECK(matrix_to_csv(m) ==
        "vertex,J,K,L\n"
        "A,1.000000,0.000000,0.000000\n"
        "B,0.000000,1.000000,0.000000\n"
        "C,0.000000,0.000000,1.000000\n"
        "D,1.000000,1.000000,1.000000\n");
}

TEST_CASE("selection with partial reach keeps exact counts") {
  const auto f = toy_fixture();
  // only y0 is reached from {x0}: J covers {y0, y1}
  const auto gx = build_ball_mapper(oracle::line_cloud({0, 5}, "x"), Metric::Euclidean,
                                    greedy_net(oracle::line_cloud({0, 5}, "x"), Metric::Euclidean, 1.0));
  const auto rel = make_relation("x", 2, "y", 6, {{0, 0}});
  const auto s = map_selection(gx, f.gy, rel, {"0"});
  CHECK(s.fractions[0] == Fraction{1, 2});
  CHECK(format_fraction(s.fractions[0].value()) == "0.500000");
  CHECK(format_fraction(2.0 / 3.0) == "0.666667");
  CHECK(round_fraction(2.0 / 3.0) == 0.666667);
}

TEST_CASE("selection errors") {
  const auto f = toy_fixture();
  try {
    map_selection(f.gx, f.gy, f.rel, {"Z"});
    FAIL("unknown vertex accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVertex);
  }
  const auto flipped = make_relation("y", 6, "x", 12, {});
  try {
    map_selection(f.gx, f.gy, flipped, {"A"});
    FAIL("mismatched relation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GraphCloudMismatch);
  }
}

TEST_CASE("empty relation gives the zero matrix") {
  const auto f = toy_fixture();
  const auto m = full_matrix(f.gx, f.gy, make_relation("x", 12, "y", 6, {}));
  for (const auto& row : m.rows) {
    for (const auto& fr : row) CHECK(fr.reached == 0);
  }
}

TEST_CASE("identity relation on one graph") {
  std::mt19937_64 rng(6);
  const auto c = oracle::random_cloud(rng, 10, 2, 1.0, false, "c");
  const auto g = build_ball_mapper(c, Metric::Euclidean, greedy_net(c, Metric::Euclidean, 0.6));
  const auto m = full_matrix(g, g, identity_relation("c", 10));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    CHECK(m.rows[v][v].value() == 1.0);
    for (std::size_t w = 0; w < g.vertices.size(); ++w) {
      std::size_t shared = 0;
      for (Index i : g.vertices[v].members) shared += std::count(g.vertices[w].members.begin(), g.vertices[w].members.end(), i);
      CHECK(m.rows[v][w] == Fraction{shared, g.vertices[w].members.size()});
    }
  }
}

TEST_CASE("fractions: brute force, monotonicity and singleton bound") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = oracle::random_cloud(rng, 60 + trial, 2, 2.0, false, "x");
    const auto y = oracle::random_cloud(rng, 40, 3, 2.0, false, "y");
    std::vector<std::pair<Index, Index>> pairs;
    for (Index i = 0; i < x.size(); ++i) {
      for (Index j = 0; j < y.size(); ++j) {
        if (coin(rng) == 0 && (i * 7 + j) % 5 == 0) pairs.emplace_back(i, j);
      }
    }
    const auto rel = make_relation("x", x.size(), "y", y.size(), pairs);
    const auto gx = build_ball_mapper(x, Metric::Euclidean, greedy_net(x, Metric::Euclidean, 0.9));
    const auto gy = build_ball_mapper(y, Metric::L1, greedy_net(y, Metric::L1, 1.5));
    const auto singles = full_matrix(gx, gy, rel);
    std::vector<std::string> grow;
    std::vector<Fraction> previous(gy.vertices.size());
    for (const auto& v : gx.vertices) {
      grow.push_back(v.id);
      const auto s = map_selection(gx, gy, rel, grow);
      const auto bf = oracle::fractions(gx, gy, rel, std::set<std::string>(grow.begin(), grow.end()));
      for (std::size_t w = 0; w < gy.vertices.size(); ++w) {
        CHECK(s.fractions[w].reached == bf[w].first);
        CHECK(s.fractions[w].total == bf[w].second);
        CHECK(s.fractions[w].reached >= previous[w].reached);
        for (const auto& id : grow) {
          CHECK(s.fractions[w].reached >= singles.rows[gx.vertex_position(id)][w].reached);
        }
      }
      previous = s.fractions;
    }
  }
}

TEST_CASE("bundled toy fixture files") {
  const std::string dir = MAPPERKIT_DATA_DIR "/toy/";
  const auto gx = import_json(read_file(dir + "x_bm.json")).graph;
  const auto gy = import_json(read_file(dir + "y_bm.json")).graph;
  const auto rel = parse_relation_csv(read_file(dir + "relation.csv"), gx.source_cloud_id, gx.cloud_size,
                                      gy.source_cloud_id, gy.cloud_size);
  CHECK(matrix_to_csv(full_matrix(gx, gy, rel)) == matrix_to_csv(full_matrix(toy_fixture().gx, toy_fixture().gy,
                                                                              toy_fixture().rel)));
}
