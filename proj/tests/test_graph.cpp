#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "rainbow.hpp"

using namespace rainbow;

TEST(Graph, CanonicalForm) {
  const auto g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 3}));
  const auto nb = g.neighbors(1);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(nb[0].neighbor, 0u);
  EXPECT_EQ(nb[1].neighbor, 3u);
  EXPECT_EQ(g.edge_between(3, 1), 2u);
  EXPECT_EQ(g.edge_between(2, 3), kNoEdge);
}

TEST(Graph, EveryEdgeInBothAdjacencies) {
  const auto g = graphs::petersen();
  std::vector<int> seen(g.num_edges(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t i = 0; i < g.neighbors(v).size(); ++i) {
      const auto inc = g.neighbors(v)[i];
      ++seen[inc.edge];
      EXPECT_TRUE(g.edge(inc.edge).has(v));
      if (i) EXPECT_LT(g.neighbors(v)[i - 1].neighbor, inc.neighbor);
    }
  }
  for (int s : seen) EXPECT_EQ(s, 2);
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
}

TEST(GraphIo, RoundTripIsBitExact) {
  GenParams gp;
  gp.n = 50;
  gp.p = 0.1;
  gp.seed = 9;
  const auto g = gen_gnp(gp).graph;
  std::ostringstream a;
  write_graph(a, g);
  std::istringstream in(a.str());
  const auto h = read_graph(in);
  EXPECT_EQ(g, h);
  std::ostringstream b;
  write_graph(b, h);
  EXPECT_EQ(a.str(), b.str());
}

TEST(GraphIo, SkipsCommentsAndBlankLines) {
  std::istringstream in("# header\n3 2\n\n0 1   \n# mid\n1 2\n");
  const auto g = read_graph(in);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(GraphIo, ParseErrors) {
  for (const char* bad : {"", "3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "3 1\n0 x\n", "3 1\n1 0\n",
                          "3 2\n1 2\n0 1\n", "3 1\n0 1 2\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n"}) {
    std::istringstream in(bad);
    try {
      read_graph(in);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::Parse || e.code() == ErrorCode::InvalidArgument) << bad;
    }
  }
}

TEST(GenGnp, PEqualsOneGivesComplete) {
  GenParams gp;
  gp.n = 5;
  gp.p = 1.0;
  gp.seed = 123;
  const auto g = gen_gnp(gp).graph;
  EXPECT_EQ(g.num_edges(), 10u);
  EXPECT_EQ(g, graphs::complete(5));
}

TEST(GenGnp, PEqualsZeroGivesEmpty) {
  GenParams gp;
  gp.n = 4;
  gp.p = 0.0;
  EXPECT_EQ(gen_gnp(gp).graph.num_edges(), 0u);
}

TEST(GenGnp, EdgeCountWithinFiveSigma) {
  GenParams gp;
  gp.n = 10000;
  gp.omega = 3.0;
  gp.seed = 7;
  const auto res = gen_gnp(gp);
  const double n = 10000.0;
  const double p = (std::log(n) + 3.0) / n;
  EXPECT_NEAR(res.p, p, 1e-15);
  const double pairs = n * (n - 1) / 2;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  EXPECT_NEAR(mean, (n - 1) * (std::log(n) + 3.0) / 2, 1e-6);
  EXPECT_LT(std::abs(static_cast<double>(res.graph.num_edges()) - mean), 5 * sd);
}

TEST(GenGnp, OmegaClamp) {
  GenParams gp;
  gp.n = 3;
  gp.omega = 100.0;
  const auto res = gen_gnp(gp);
  EXPECT_TRUE(res.p_clamped);
  EXPECT_EQ(res.p, 1.0);
}

TEST(GenGnp, Deterministic) {
  GenParams gp;
  gp.n = 300;
  gp.omega = 1.0;
  gp.seed = 42;
  EXPECT_EQ(gen_gnp(gp).graph, gen_gnp(gp).graph);
  auto other = gp;
  other.seed = 43;
  EXPECT_NE(gen_gnp(gp).graph, gen_gnp(other).graph);
}

TEST(GenRegular, ParityError) {
  GenParams gp;
  gp.n = 5;
  gp.r = 3;
  try {
    gen_regular_config(gp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parity);
  }
}

TEST(GenRegular, FourVerticesCubicIsK4) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams gp;
    gp.n = 4;
    gp.r = 3;
    gp.seed = seed;
    EXPECT_EQ(gen_regular_config(gp).graph, graphs::complete(4));
  }
}

TEST(GenRegular, ExhaustedWhenCapTiny) {
  GenParams gp;
  gp.n = 200;
  gp.r = 6;
  gp.max_attempts = 1;
  std::size_t exhausted = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    gp.seed = s;
    try {
      gen_regular_config(gp);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Exhausted);
      ++exhausted;
    }
  }
  // Acceptance probability for r = 6 is about exp(-35/4), far below 1/20.
  EXPECT_GT(exhausted, 15u);
}

TEST(GenRegular, SimpleRegularDeterministic) {
  for (std::size_t r : {3, 4, 5}) {
    GenParams gp;
    gp.n = 200;
    gp.r = r;
    gp.seed = 17;
    const auto res = gen_regular_config(gp);
    EXPECT_GE(res.attempts, 1u);
    for (Vertex v = 0; v < gp.n; ++v) EXPECT_EQ(res.graph.degree(v), r);
    EXPECT_EQ(res.graph, gen_regular_config(gp).graph);
  }
}

TEST(GenRegular, AcceptanceFraction) {
  // Pilot: 0.13-0.14 per attempt (the pairing is simple with probability
  // about exp(-(r^2-1)/4) = exp(-2)). Threshold 0.05.
  Rng rng(derive_seed(2024, "acceptance"));
  std::size_t accepted = 0;
  for (int i = 0; i < 1000; ++i) accepted += try_configuration_pairing(100, 3, rng).has_value();
  EXPECT_GT(accepted / 1000.0, 0.05);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(graphs::path(4)), 3u);
  EXPECT_EQ(diameter(graphs::complete(4)), 1u);
  EXPECT_EQ(diameter(graphs::cycle(6)), 3u);
  EXPECT_EQ(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::nullopt);
  EXPECT_EQ(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}}), DiameterMode::DoubleSweep), std::nullopt);
}

TEST(Diameter, MatchesAllPairsOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenParams gp;
    gp.n = 8 + seed % 57;
    gp.omega = 1.5;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    const auto expect = oracle::diameter(g);
    EXPECT_EQ(diameter(g), expect) << seed;
    const auto lb = diameter(g, DiameterMode::DoubleSweep);
    ASSERT_EQ(lb.has_value(), expect.has_value());
    if (lb) EXPECT_LE(*lb, *expect);
  }
}
