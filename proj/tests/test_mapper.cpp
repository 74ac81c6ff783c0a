#include <doctest.h>

#include <numbers>
#include <random>

#include "mapperkit/clustering.hpp"
#include "mapperkit/mapper.hpp"
#include "oracles.hpp"

using namespace mapperkit;

namespace {

Eigen::MatrixXd column_lens(const std::vector<double>& v) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = v[i];
  return m;
}

std::vector<Index> all(Index n) {
  std::vector<Index> out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

}  // namespace

TEST_CASE("interval covers") {
  const auto lens = column_lens({0.0, 0.3, 1.0});
  const auto bisect = cover_range(lens, {2}, 0.0);
  REQUIRE(bisect.axes[0].size() == 2);
  CHECK(bisect.axes[0][0].lo == 0.0);
  CHECK(bisect.axes[0][0].hi == 0.5);
  CHECK(bisect.axes[0][1].lo == 0.5);
  CHECK(bisect.axes[0][1].hi == 1.0);
  CHECK(bisect.cube_count() == 2);

  const auto five = cover_range(lens, {5}, 0.2);
  const auto& iv = five.axes[0];
  REQUIRE(iv.size() == 5);
  CHECK(iv.front().lo == 0.0);
  CHECK(iv.back().hi == 1.0);
  const double len = 1.0 / (5 - 4 * 0.2);
  for (std::size_t k = 0; k < 5; ++k) CHECK(iv[k].hi - iv[k].lo == doctest::Approx(len).epsilon(1e-12));
  for (std::size_t k = 0; k + 1 < 5; ++k) {
    CHECK(iv[k].hi - iv[k + 1].lo == doctest::Approx(0.2 * len).epsilon(1e-12));
  }

  const auto flat = cover_range(column_lens({2, 2, 2}), {4}, 0.5);
  CHECK(flat.cube_count() == 1);
  CHECK(flat.cube_contains(0, Eigen::RowVectorXd::Constant(1, 2.0)));
}

TEST_CASE("multi-axis covers") {
  Eigen::MatrixXd lens(4, 2);
  lens << 0, 0, 1, 0, 0, 1, 1, 1;
  const auto c = cover_range(lens, {2, 3}, 0.1);
  CHECK(c.dimension() == 2);
  CHECK(c.cube_count() == 6);
  CHECK(c.cube(1) == std::vector<std::size_t>{0, 1});
  CHECK(c.cube(3) == std::vector<std::size_t>{1, 0});
  for (Eigen::Index i = 0; i < 4; ++i) {
    bool inside = false;
    for (std::size_t q = 0; q < c.cube_count(); ++q) inside = inside || c.cube_contains(q, lens.row(i));
    CHECK(inside);
  }
}

TEST_CASE("cover validation") {
  const auto lens = column_lens({0, 1});
  CHECK_THROWS_AS(cover_range(lens, {0}, 0.1), Error);
  CHECK_THROWS_AS(cover_range(lens, {2}, 1.0), Error);
  CHECK_THROWS_AS(cover_range(lens, {2}, -0.1), Error);
  CHECK_THROWS_AS(cover_range(lens, {2, 2}, 0.1), Error);
  CHECK_THROWS_AS(cover_range(Eigen::MatrixXd::Zero(3, 4), {2, 2, 2, 2}, 0.1), Error);
}

TEST_CASE("clustering examples") {
  const auto blobs = oracle::line_cloud({0, 0.3, 0.6, 10, 10.4});
  const ClusteringSpec radius{ClusteringKind::RadiusComponents, 1.0, 1};
  const auto two = cluster(blobs, all(5), Metric::Euclidean, radius);
  REQUIRE(two.clusters.size() == 2);
  CHECK(two.clusters[0] == std::vector<Index>{0, 1, 2});
  CHECK(two.clusters[1] == std::vector<Index>{3, 4});
  CHECK(two.noise.empty());

  const auto chain = oracle::line_cloud({0, 0.9, 1.8, 2.7, 3.6});
  CHECK(cluster(chain, all(5), Metric::Euclidean, radius).clusters.size() == 1);
  const auto one = cluster(chain, {3}, Metric::Euclidean, radius);
  CHECK(one.clusters == std::vector<std::vector<Index>>{{3}});
}

TEST_CASE("DBSCAN noise and border points") {
  // core points need 3 neighbours (themselves included) within 1
  const auto line = oracle::line_cloud({0, 0.5, 1.0, 1.9, 5});
  const ClusteringSpec db{ClusteringKind::Dbscan, 1.0, 3};
  const auto c = cluster(line, all(5), Metric::Euclidean, db);
  REQUIRE(c.clusters.size() == 1);
  CHECK(c.clusters[0] == std::vector<Index>{0, 1, 2, 3});  // 3 is a border point of core 2
  CHECK(c.noise == std::vector<Index>{4});

  // border point 3 is reachable from cores in both blobs; it joins the
  // cluster of the lowest-indexed core
  const auto tie = oracle::line_cloud({0, 0.125, 0.25, 1.0, 1.75, 1.875, 2.0});
  const auto t = cluster(tie, all(7), Metric::Euclidean, ClusteringSpec{ClusteringKind::Dbscan, 0.75, 4});
  REQUIRE(t.clusters.size() == 2);
  CHECK(t.clusters[0] == std::vector<Index>{0, 1, 2, 3});
  CHECK(t.clusters[1] == std::vector<Index>{4, 5, 6});
}

TEST_CASE("clustering spec validation") {
  CHECK_THROWS_AS((ClusteringSpec{ClusteringKind::Dbscan, 0.0, 1}.validate()), Error);
  CHECK_THROWS_AS((ClusteringSpec{ClusteringKind::Dbscan, 1.0, 0}.validate()), Error);
  CHECK(parse_clustering_kind("radius-components") == ClusteringKind::RadiusComponents);
  CHECK(parse_clustering_kind("dbscan") == ClusteringKind::Dbscan);
  CHECK_FALSE(parse_clustering_kind("kmeans").has_value());
  CHECK(ClusteringSpec{ClusteringKind::Dbscan, 0.5, 4}.describe() == "dbscan(eps_db=0.5,min_pts=4)");
}

TEST_CASE("DBSCAN(min_pts=1) equals radius components equals brute force") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Metric m = trial % 3 == 0 ? Metric::Cosine : (trial % 3 == 1 ? Metric::L1 : Metric::Euclidean);
    // integer clouds only for the norms: rounding can produce a zero vector
    const auto c = oracle::random_cloud(rng, 15 + trial * 4, 1 + trial % 4, 3.0, trial % 4 == 1 && m != Metric::Cosine);
    const double eps = m == Metric::Cosine ? 0.05 : 0.9;
    std::vector<Index> subset;
    for (Index i = 0; i < c.size(); i += 1 + trial % 2) subset.push_back(i);
    const auto r = cluster(c, subset, m, ClusteringSpec{ClusteringKind::RadiusComponents, eps, 1});
    const auto d = cluster(c, subset, m, ClusteringSpec{ClusteringKind::Dbscan, eps, 1});
    CHECK(r.clusters == d.clusters);
    CHECK(d.noise.empty());
    auto expected = oracle::components(subset.size(), [&](Index u, Index v) {
      return oracle::distance(m, c, subset[u], subset[v]) <= eps;
    });
    for (auto& comp : expected) {
      for (auto& k : comp) k = subset[k];
    }
    CHECK(r.clusters == expected);
  }
}

TEST_CASE("Mapper on a circle with five intervals is an 8-cycle") {
  const int n = 200;
  Cloud::Matrix pts(2, n);
  std::vector<double> height(n);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    pts(0, i) = std::cos(a);
    pts(1, i) = std::sin(a);
    height[static_cast<std::size_t>(i)] = pts(1, i);
  }
  const Cloud circle("circle", pts);
  const auto lens = column_lens(height);
  const auto g = build_mapper(circle, lens, cover_range(lens, {5}, 0.2), Metric::Euclidean,
                              ClusteringSpec{ClusteringKind::RadiusComponents, 0.1, 1}, "height");
  CHECK(g.vertices.size() == 8);
  CHECK(is_single_cycle(g));
  CHECK(covers_cloud(g));
  CHECK(g.params.at("lens") == "height");
  CHECK(g.params.at("resolution") == "5");
  CHECK(oracle::edges_of(g) == oracle::nerve(g.vertices));
}

TEST_CASE("Mapper on a segment is a path") {
  std::vector<double> xs;
  for (int i = 0; i <= 100; ++i) xs.push_back(i * 0.01);
  const auto seg = oracle::line_cloud(xs);
  const auto lens = column_lens(xs);
  const auto spec = ClusteringSpec{ClusteringKind::RadiusComponents, 0.05, 1};
  const auto g = build_mapper(seg, lens, cover_range(lens, {3}, 0.3), Metric::Euclidean, spec);
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(degrees(g) == std::vector<std::size_t>{1, 2, 1});
  CHECK(g.vertices[0].id == "0.0");

  // k = 1 with a coarse clustering threshold: one vertex per cluster, no edges
  const auto gaps = oracle::line_cloud({0, 0.1, 5, 5.1, 9});
  const auto glens = column_lens({0, 0.1, 5, 5.1, 9});
  const auto single = build_mapper(gaps, glens, cover_range(glens, {1}, 0.0), Metric::Euclidean,
                                   ClusteringSpec{ClusteringKind::RadiusComponents, 1.0, 1});
  CHECK(single.vertices.size() == 3);
  CHECK(single.edges.empty());
}

TEST_CASE("Mapper turns DBSCAN noise into singleton vertices") {
  const auto pts = oracle::line_cloud({0, 0.1, 0.2, 3});
  const auto lens = column_lens({0, 0, 0, 0});
  const auto g = build_mapper(pts, lens, cover_range(lens, {1}, 0.0), Metric::Euclidean,
                              ClusteringSpec{ClusteringKind::Dbscan, 0.5, 2});
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[1].members == std::vector<Index>{3});
  CHECK(covers_cloud(g));
  CHECK_THROWS_AS(build_mapper(pts, column_lens({0, 0}), cover_range(lens, {1}, 0.0), Metric::Euclidean,
                               ClusteringSpec{}),
                  Error);
}
