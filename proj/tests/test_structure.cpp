#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rainbow.hpp"

using namespace rainbow;

TEST(DegreeStats, Star) {
  const auto s = degree_stats(graphs::star(3), 0.5);
  EXPECT_EQ(s.z1, 3u);
  EXPECT_EQ(s.histogram, (std::map<std::size_t, std::size_t>{{1, 3}, {3, 1}}));
  EXPECT_EQ(s.z1, s.histogram.at(1));
}

TEST(DegreeStats, CliqueAndCycle) {
  EXPECT_EQ(degree_stats(graphs::complete(5), 1.0).z1, 0u);
  const auto c = degree_stats(graphs::cycle(5), 2.5);
  EXPECT_EQ(c.small_vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(degree_stats(graphs::cycle(5), 2.0).small_vertices.empty());
}

TEST(SmallSeparation, Examples) {
  const auto v = check_small_separation(graphs::path(3), 1.5, 2);
  EXPECT_EQ(v, (std::vector<std::pair<Vertex, Vertex>>{{0, 2}}));
  EXPECT_TRUE(check_small_separation(graphs::path(3), 1.5, 1).empty());
  EXPECT_TRUE(check_small_separation(graphs::complete(4), 2.9, 5).empty());
}

TEST(SmallSeparation, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenParams gp;
    gp.n = 30;
    gp.p = 0.08;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    const auto d = oracle::all_pairs(g);
    std::vector<std::pair<Vertex, Vertex>> expect;
    for (Vertex a = 0; a < 30; ++a)
      for (Vertex b = a + 1; b < 30; ++b)
        if (g.degree(a) < 2.5 && g.degree(b) < 2.5 && d[a][b] <= 3) expect.emplace_back(a, b);
    EXPECT_EQ(check_small_separation(g, 2.5, 3), expect) << seed;
  }
}

TEST(LocalDensity, ForestsNeverViolate) {
  for (auto g : {graphs::path(9), graphs::star(6), graphs::complete_tree(3, 3),
                 graphs::disjoint_union(graphs::path(4), graphs::complete_tree(2, 3))})
    for (std::uint32_t radius = 1; radius <= 4; ++radius)
      for (long long t : {0, 1, 2}) EXPECT_TRUE(check_local_density(g, radius, t).empty());
}

TEST(LocalDensity, K4) {
  const auto v = check_local_density(graphs::complete(4), 1, 1);
  ASSERT_EQ(v.size(), 4u);
  for (const auto& d : v) {
    EXPECT_EQ(d.ball_size, 4u);
    EXPECT_EQ(d.ball_edges, 6u);
  }
}

TEST(LocalDensity, RandomCubicAtSmallRadius) {
  // Pilot: 0 violations over 100 seeds at radius floor(log2(2000) / 10) = 1.
  const auto radius = static_cast<std::uint32_t>(std::floor(std::log2(2000.0) / 10));
  ASSERT_EQ(radius, 1u);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams gp;
    gp.n = 2000;
    gp.r = 3;
    gp.seed = seed;
    EXPECT_TRUE(check_local_density(gen_regular_config(gp).graph, radius, 1).empty()) << seed;
  }
}

TEST(NeighborhoodCycle, Examples) {
  EXPECT_EQ(neighborhood_cycle(graphs::complete_tree(2, 3), 0, 3).kind, NeighborhoodCycle::Kind::None);
  const auto c = neighborhood_cycle(graphs::cycle(5), 2, 3);
  ASSERT_EQ(c.kind, NeighborhoodCycle::Kind::Unique);
  EXPECT_EQ(c.cycle.size(), 5u);
  EXPECT_EQ(c.cycle.front(), 0u);
  EXPECT_EQ(neighborhood_cycle(graphs::complete(4), 0, 2).kind, NeighborhoodCycle::Kind::Ambiguous);
}

TEST(NeighborhoodCycle, TriangleWithTail) {
  // Triangle 2-3-4, tail 0-1-2, pendant 4-5.
  const auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  const auto far = neighborhood_cycle(g, 0, 1);
  EXPECT_EQ(far.kind, NeighborhoodCycle::Kind::None);
  const auto near = neighborhood_cycle(g, 0, 3);
  ASSERT_EQ(near.kind, NeighborhoodCycle::Kind::Unique);
  EXPECT_EQ(near.cycle, (std::vector<Vertex>{2, 3, 4}));
}

TEST(Ball, MatchesOracleLevels) {
  const auto g = graphs::petersen();
  for (Vertex x = 0; x < 10; ++x) {
    EXPECT_EQ(ball(g, x, 1).size(), 4u);
    EXPECT_EQ(ball(g, x, 2).size(), 10u);
  }
}

TEST(ScaleL, Formula) {
  EXPECT_NEAR(scale_L(100000), std::log(1e5) / std::log(std::log(1e5)), 1e-12);
  EXPECT_THROW(scale_L(15), Error);
  EXPECT_GT(std::log(std::log(16.0)), 1.0);
}
