#include <doctest.h>

#include <random>

#include "mapperkit/datasets.hpp"
#include "mapperkit/group_action.hpp"
#include "mapperkit/metric.hpp"
#include "oracles.hpp"

using namespace mapperkit;

TEST_CASE("distance examples") {
  Eigen::Vector2d o(0, 0), p(3, 4);
  CHECK(distance(Metric::Euclidean, o, p) == 5.0);
  CHECK(distance(Metric::L1, Eigen::Vector3d(1, -1, 0), Eigen::Vector3d::Zero()) == 2.0);
  CHECK(distance(Metric::Cosine, Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) == 1.0);
  CHECK(distance(Metric::Cosine, Eigen::Vector2d(2, 0), Eigen::Vector2d(5, 0)) == 0.0);
}

TEST_CASE("distance errors") {
  Eigen::VectorXd a(2), b(3);
  a << 1, 2;
  b << 1, 2, 3;
  CHECK_THROWS_AS(distance(Metric::L1, a, b), Error);
  try {
    distance(Metric::Euclidean, a, b);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  try {
    distance(Metric::Cosine, Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0));
    FAIL("zero vector accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVectorCosine);
  }
}

TEST_CASE("metric names") {
  CHECK(parse_metric("l2") == Metric::Euclidean);
  CHECK(parse_metric("manhattan") == Metric::L1);
  CHECK(parse_metric("cosine-dissimilarity") == Metric::Cosine);
  CHECK_FALSE(parse_metric("chebyshev").has_value());
  for (Metric m : {Metric::Euclidean, Metric::L1, Metric::Cosine}) CHECK(parse_metric(to_string(m)) == m);
}

TEST_CASE("metric axioms on random vectors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_cloud(rng, 3, 1 + trial % 7, 5.0);
    for (Metric m : {Metric::Euclidean, Metric::L1, Metric::Cosine}) {
      const double dxy = distance(m, c.point(0), c.point(1));
      CHECK(dxy >= 0.0);
      CHECK(dxy == distance(m, c.point(1), c.point(0)));
      CHECK(distance(m, c.point(2), c.point(2)) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(dxy == doctest::Approx(oracle::distance(m, c, 0, 1)).epsilon(1e-12));
      if (m != Metric::Cosine) {
        CHECK(dxy <= distance(m, c.point(0), c.point(2)) + distance(m, c.point(2), c.point(1)) + 1e-12);
      }
    }
  }
}

TEST_CASE("float scalar") {
  Eigen::Vector2f a(0, 0), b(3, 4);
  CHECK(distance(Metric::Euclidean, a, b) == 5.0f);
}

TEST_CASE("permutation helpers") {
  Permutation p{1, 2, 0}, q{0, 2, 1};
  CHECK(is_permutation_of_range(p, 3));
  CHECK_FALSE(is_permutation_of_range({0, 0, 1}, 3));
  CHECK_FALSE(is_permutation_of_range({0, 1}, 3));
  CHECK(compose(p, inverse(p)) == Permutation{0, 1, 2});
  CHECK(compose(p, q)[1] == p[q[1]]);
}

TEST_CASE("orbit examples") {
  const auto trivial = GroupAction::trivial(10);
  CHECK(trivial.order() == 1);
  CHECK(trivial.orbit(7).members == std::vector<Index>{7});
  CHECK_THROWS_AS(trivial.orbit(10), Error);

  const GroupAction swap(3, {{1, 0, 2}});
  CHECK(swap.order() == 2);
  CHECK(swap.orbit(0).members == std::vector<Index>{0, 1});
  CHECK(swap.orbit(1).members == swap.orbit(0).members);
  CHECK(swap.orbit(0).seed == 0);
  CHECK(swap.orbits().size() == 2);
}

TEST_CASE("generator validation and cap") {
  try {
    GroupAction(3, {{0, 0, 1}});
    FAIL("non-bijection accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  // the symmetric group on 8 points has order 40320
  Permutation cycle{1, 2, 3, 4, 5, 6, 7, 0}, transposition{1, 0, 2, 3, 4, 5, 6, 7};
  try {
    GroupAction(8, {cycle, transposition});
    FAIL("group cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
  CHECK(GroupAction(8, {cycle, transposition}, 50000).order() == 40320);
}

TEST_CASE("coordinate-map actions") {
  const auto c = oracle::line_cloud({-2, -1, 1, 2, 0});
  using V = Eigen::VectorXd;
  const std::vector<CoordinateMap<double>> negate{[](const V& v) { return V(-v); }};
  const auto a = build_action_from_coordinate_maps(c, negate);
  CHECK(a.order() == 2);
  CHECK(a.apply(1, 0) == 3);
  CHECK(a.apply(1, 4) == 4);

  const std::vector<CoordinateMap<double>> id{[](const V& v) { return v; }};
  CHECK(build_action_from_coordinate_maps(c, id).order() == 1);

  const auto missing = oracle::line_cloud({-2, -1, 1});
  try {
    build_action_from_coordinate_maps(missing, negate);
    FAIL("unmatched image accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnmatchedImage);
  }

  const auto noisy = oracle::line_cloud({-1.0, 1.05, 0.95});
  try {
    build_action_from_coordinate_maps(noisy, negate, 0.1);
    FAIL("ambiguous match accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousMatch);
  }
  const auto near = oracle::line_cloud({-1.0, 1.05});
  CHECK(build_action_from_coordinate_maps(near, negate, 0.1).order() == 2);
  CHECK_THROWS_AS(build_action_from_coordinate_maps(near, negate, 0.0), Error);
  CHECK_THROWS_AS(build_action_from_coordinate_maps(near, negate, -1.0), Error);

  const std::vector<CoordinateMap<double>> widen{[](const V&) { return V(V::Zero(2)); }};
  try {
    build_action_from_coordinate_maps(c, widen);
    FAIL("dimension change accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("dihedral action: closure, orbit partition and isometry") {
  const auto [cloud, action] = generate_tictactoe();
  REQUIRE(action.order() == 8);
  const auto& els = action.elements();
  std::set<Permutation> stored(els.begin(), els.end());
  for (const auto& g : els) {
    CHECK(stored.count(inverse(g)) == 1);
    for (const auto& h : els) CHECK(stored.count(compose(g, h)) == 1);
  }

  std::vector<int> seen(cloud.size(), 0);
  for (const auto& o : action.orbits()) {
    for (Index i : o.members) ++seen[i];
    for (const auto& g : els) {
      for (Index i : o.members) CHECK(std::binary_search(o.members.begin(), o.members.end(), g[i]));
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick_g(0, 7);
  std::uniform_int_distribution<Index> pick_i(0, cloud.size() - 1);
  for (int s = 0; s < 100; ++s) {
    const std::size_t g = pick_g(rng);
    const Index i = pick_i(rng), j = pick_i(rng);
    for (Metric m : {Metric::L1, Metric::Euclidean}) {
      CHECK(distance(m, cloud.point(i), cloud.point(j)) ==
            distance(m, cloud.point(action.apply(g, i)), cloud.point(action.apply(g, j))));
    }
  }
}

TEST_CASE("asymmetric board has an orbit of size 8") {
  const auto [cloud, action] = generate_tictactoe();
  // x wins on the top row; o sits in two cells with no common symmetry
  const std::string board = "xxxoo----";
  const auto it = std::find(cloud.labels().begin(), cloud.labels().end(), board);
  REQUIRE(it != cloud.labels().end());
  const Index i = static_cast<Index>(it - cloud.labels().begin());
  const auto orbit = action.orbit(i);
  CHECK(orbit.members.size() == 8);
  std::set<std::string> distinct;
  for (Index j : orbit.members) distinct.insert(cloud.labels()[j]);
  CHECK(distinct.size() == 8);
}

TEST_CASE("orbit partition on random permutation groups") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 7;  // at most 8! elements
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      Permutation p(n);
      std::iota(p.begin(), p.end(), Index{0});
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const GroupAction a(n, gens, 1000000);
    const auto orbits = oracle::components(n, [&](Index u, Index v) {
      return std::any_of(gens.begin(), gens.end(), [&](const Permutation& p) { return p[u] == v || p[v] == u; });
    });
    REQUIRE(a.orbits().size() == orbits.size());
    for (std::size_t k = 0; k < orbits.size(); ++k) CHECK(a.orbits()[k].members == orbits[k]);
  }
}
