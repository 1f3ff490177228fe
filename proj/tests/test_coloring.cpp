#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rainbow.hpp"

using namespace rainbow;

TEST(Thm1Params, TenToTheFive) {
  const auto p = thm1_params(100000);
  EXPECT_NEAR(p.epsilon, 0.6397, 5e-4);
  EXPECT_NEAR(p.L, 4.712, 5e-4);
  EXPECT_EQ(p.q, 20u);
  EXPECT_NEAR(p.p0, 0.483, 5e-4);
  EXPECT_EQ(p.k, static_cast<std::size_t>(std::ceil(p.epsilon * p.L)));
  EXPECT_EQ(p.gamma, static_cast<std::size_t>(std::ceil((0.5 + p.epsilon) * p.L)));
  EXPECT_GT(p.p0, 0.0);
  EXPECT_LT(p.p0, 1.0);
}

TEST(Thm1Params, BoundaryReportsClamps) {
  const auto p = thm1_params(16);
  EXPECT_NEAR(std::log(std::log(16.0)), 1.020, 5e-4);
  EXPECT_NEAR(p.L, std::log(16.0) / std::log(std::log(16.0)), 1e-12);
  EXPECT_NEAR(p.L, 2.719, 5e-4);
  EXPECT_FALSE(p.clamps.empty());
  EXPECT_EQ(p.branching, 1.0);
  EXPECT_GE(p.k, 1u);
  EXPECT_GE(p.q, 2u);
  EXPECT_THROW(thm1_params(15), Error);
}

TEST(RegularParams, Examples) {
  const auto a = regular_params(1000000, 4);
  EXPECT_EQ(a.k, 4u);
  EXPECT_EQ(a.q, 65610u);
  EXPECT_NEAR(a.theta_r, std::log(3.0) / std::log(2.0), 1e-12);
  EXPECT_NEAR(a.theta_r, 1.585, 5e-4);
  EXPECT_EQ(regular_params(1000000, 3).k, 4u);
  EXPECT_THROW(regular_params(1000, 2), Error);
  for (std::size_t r : {4, 5, 6, 8}) EXPECT_GT(regular_params(5000, r).theta_r, 1.0);
}

TEST(RegularParams, DeskScaleValues) {
  // Values used by the greedy properness checks.
  EXPECT_EQ(regular_params(2000, 3).k, 3u);
  EXPECT_EQ(regular_params(2000, 3).q, 640u);
  EXPECT_EQ(regular_params(2000, 4).k, 3u);
  EXPECT_EQ(regular_params(2000, 4).q, 7290u);
  EXPECT_EQ(regular_params(2000, 5).k, 2u);
  EXPECT_EQ(regular_params(2000, 5).q, 2560u);
  const auto p = regular_params(10000, 4);
  EXPECT_EQ(p.k, 4u);
  EXPECT_EQ(p.gamma, 6u);
  EXPECT_EQ(p.sigma, 2u);  // 2^3 - 6
  EXPECT_EQ(regular_params(10000, 3).sigma, std::uint64_t{1} << (regular_params(10000, 3).k / 2));
}

TEST(ColorThm1, StarK15) {
  const auto g = graphs::star(5);
  const auto params = thm1_params(16);
  const auto res = color_thm1(g, params, 1);
  EXPECT_EQ(res.z1, 5u);
  EXPECT_EQ(res.coloring.palette_size, std::max<std::size_t>(5, params.q) + 2);
  std::set<Color> seen;
  for (EdgeId e = 0; e < 5; ++e) {
    EXPECT_EQ(res.coloring.provenance[e], Provenance::Pendant);
    EXPECT_LT(res.coloring.colors[e], 5u);
    seen.insert(res.coloring.colors[e]);
  }
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_TRUE(verify_all_pairs(g, res.coloring, VerifyMode::Exact).all_connected());
  EXPECT_TRUE(oracle::rainbow_connected(oracle::raw(g), res.coloring.colors));
}

TEST(ColorThm1, P3) {
  const auto g = graphs::path(3);
  const auto params = thm1_params(16);
  const auto res = color_thm1(g, params, 5);
  EXPECT_EQ(res.z1, 2u);
  EXPECT_EQ(res.coloring.colors, (std::vector<Color>{0, 1}));
  EXPECT_EQ(res.coloring.colors_used(), 2u);
  EXPECT_EQ(res.coloring.palette_size, params.q + 2);
  EXPECT_TRUE(verify_all_pairs(g, res.coloring, VerifyMode::Exact).all_connected());
}

TEST(ColorThm1, SingleEdgePendantAtBothEnds) {
  const auto res = color_thm1(graphs::path(2), thm1_params(16), 0);
  EXPECT_EQ(res.z1, 2u);
  EXPECT_EQ(res.pendant_colors, 1u);
  EXPECT_EQ(res.coloring.colors[0], 0u);
}

TEST(ColorThm1, NotConnected) {
  try {
    color_thm1(Graph::from_edges(4, {{0, 1}, {2, 3}}), thm1_params(16), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
}

TEST(ColorThm1, RedBlueAtSmallVertices) {
  // Small threshold 2.5: every degree-2 vertex of the cycle gets Red and Blue
  // on its two lowest-id edges still free.
  const auto g = graphs::cycle(6);
  const auto res = color_thm1(g, thm1_params(16), 3, 2.5);
  EXPECT_EQ(res.z1, 0u);
  EXPECT_GT(res.v2_count, 0u);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (res.coloring.provenance[e] == Provenance::RedBlue)
      EXPECT_TRUE(res.coloring.colors[e] == res.red() || res.coloring.colors[e] == res.blue());
  }
}

TEST(ColorThm1, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams gp;
    gp.n = 400;
    gp.omega = 0.0;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    if (!is_connected(g)) continue;
    const auto params = thm1_params(400);
    const auto res = color_thm1(g, params, seed, 2.5);
    const auto& c = res.coloring;
    c.check(g.num_edges());
    const std::size_t z1 = count_pendant_vertices(g);
    EXPECT_EQ(c.palette_size, std::max(z1, params.q) + 2);
    std::set<Color> pendant;
    std::size_t pendant_edges = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      const bool is_pendant = g.degree(ed.u) == 1 || g.degree(ed.v) == 1;
      EXPECT_EQ(is_pendant, c.provenance[e] == Provenance::Pendant);
      if (is_pendant) {
        pendant.insert(c.colors[e]);
        ++pendant_edges;
      }
      if (c.provenance[e] == Provenance::Random) EXPECT_LT(c.colors[e], c.palette_size - 2);
    }
    EXPECT_EQ(pendant.size(), pendant_edges);
    EXPECT_EQ(c, color_thm1(g, params, seed, 2.5).coloring);
  }
}

TEST(ColoringIo, RoundTrip) {
  const auto g = graphs::petersen();
  const auto c = color_greedy_power(g, 2, 40, 3);
  std::ostringstream a;
  write_coloring(a, c);
  std::istringstream in(a.str());
  const auto back = read_coloring(in);
  EXPECT_EQ(back, c);
  std::ostringstream b;
  write_coloring(b, back);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream bad("2 3\n0 1 greedy\n1 3 greedy\n");
  EXPECT_THROW(read_coloring(bad), Error);
  std::istringstream bad_tag("1 3\n0 1 purple\n");
  EXPECT_THROW(read_coloring(bad_tag), Error);
}

TEST(LineDistance, Examples) {
  const auto p3 = graphs::path(3);
  EXPECT_EQ(line_distance_neighbors(p3, 0, 1), (std::vector<EdgeId>{1}));
  const auto star = graphs::star(4);
  for (EdgeId e = 0; e < 4; ++e) EXPECT_EQ(line_distance_neighbors(star, e, 1).size(), 3u);
  const auto c6 = graphs::cycle(6);
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(line_distance_neighbors(c6, e, 2).size(), 4u);
}

TEST(LineDistance, MatchesExplicitLineGraph) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenParams gp;
    gp.n = 25;
    gp.p = 0.12;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto dist = oracle::line_distances(g, e);
      for (std::uint32_t radius : {1u, 2u, 3u, 5u}) {
        std::vector<EdgeId> expect;
        for (EdgeId f = 0; f < g.num_edges(); ++f)
          if (f != e && dist[f] <= radius) expect.push_back(f);
        auto got = line_distance_neighbors(g, e, radius);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expect) << seed << ' ' << e << ' ' << radius;
      }
    }
  }
}

namespace {

bool proper_by_oracle(const Graph& g, const EdgeColoring& c, std::size_t radius) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto dist = oracle::line_distances(g, e);
    for (EdgeId f = e + 1; f < g.num_edges(); ++f)
      if (dist[f] <= radius && c.colors[e] == c.colors[f]) return false;
  }
  return true;
}

}  // namespace

TEST(ColorGreedy, PetersenProper) {
  const auto g = graphs::petersen();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = color_greedy_power(g, 2, 40, seed);
    EXPECT_TRUE(proper_by_oracle(g, c, 2));
    EXPECT_FALSE(find_power_conflict(g, c, 2));
    for (auto p : c.provenance) EXPECT_EQ(p, Provenance::Greedy);
  }
}

TEST(ColorGreedy, LargeRadiusForcesDistinct) {
  const auto g = graphs::petersen();
  const auto c = color_greedy_power(g, 10, g.num_edges(), 4);
  EXPECT_EQ(c.colors_used(), g.num_edges());
}

TEST(ColorGreedy, C6SmallPalettes) {
  // In id order (01, 05, 12, 23, 34, 45) every edge after the first three has
  // its color forced by the earlier ones, so q = 3 never exhausts either.
  const auto g = graphs::cycle(6);
  std::size_t exhausted = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    try {
      EXPECT_TRUE(proper_by_oracle(g, color_greedy_power(g, 2, 3, seed), 2));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PaletteExhausted);
      EXPECT_NE(std::string(e.what()).find("edge"), std::string::npos);
      ++exhausted;
    }
    EXPECT_NO_THROW(color_greedy_power(g, 2, 5, seed));
  }
  EXPECT_EQ(exhausted, 0u);
}

TEST(ColorGreedy, Deterministic) {
  GenParams gp;
  gp.n = 300;
  gp.r = 3;
  gp.seed = 2;
  const auto g = gen_regular_config(gp).graph;
  EXPECT_EQ(color_greedy_power(g, 4, 100, 9), color_greedy_power(g, 4, 100, 9));
}

TEST(ColorGreedy, DepthKTreesAreRainbow) {
  GenParams gp;
  gp.n = 500;
  gp.r = 4;
  gp.seed = 5;
  const auto g = gen_regular_config(gp).graph;
  const std::uint32_t k = 2;
  const auto c = color_greedy_power(g, 2 * k, 10 * 81, 1);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto t = grow_bfs_tree(g, x, k, 0.0);
    std::set<Color> seen;
    for (auto e : t.edges()) EXPECT_TRUE(seen.insert(c.colors[e]).second) << x;
  }
}

namespace {

// Triangle with three pendant paths of length 2 (a unicyclic gadget).
Graph gadget() {
  return Graph::from_edges(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 6}, {2, 7}, {7, 8}});
}

}  // namespace

TEST(CycleClasses, ForestIsUnchanged) {
  const auto g = graphs::complete_tree(2, 4);
  const auto base = color_greedy_power(g, 4, 200, 1);
  const auto res = recolor_cycle_classes(g, base, 3);
  EXPECT_EQ(res.coloring, base);
  EXPECT_EQ(res.fresh_colors, 0u);
  EXPECT_TRUE(res.classes.empty());
}

TEST(CycleClasses, IsomorphicCopiesColoredIdentically) {
  const auto one = gadget();
  const auto g = graphs::disjoint_union(one, one);
  const auto base = color_greedy_power(g, 4, 200, 2);
  const auto res = recolor_cycle_classes(g, base, 2);
  ASSERT_EQ(res.classes.size(), 2u);
  const auto& a = res.classes[0];
  const auto& b = res.classes[1];
  EXPECT_EQ(a.cycle_length(), 3u);
  EXPECT_FALSE(a.shape_mismatch);
  EXPECT_FALSE(b.shape_mismatch);
  EXPECT_EQ(a.positional_coloring, b.positional_coloring);
  EXPECT_EQ(a.palette_begin, b.palette_begin);
  ASSERT_EQ(a.edges.size(), b.edges.size());
  // Position i of the first copy maps to the shifted edge of the second.
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const Edge ea = g.edge(a.edges[i]);
    const Edge eb = g.edge(b.edges[i]);
    EXPECT_EQ(ea.u + 9, eb.u);
    EXPECT_EQ(ea.v + 9, eb.v);
    EXPECT_EQ(res.coloring.colors[a.edges[i]], res.coloring.colors[b.edges[i]]);
  }
  for (auto col : a.positional_coloring) EXPECT_GE(col, base.palette_size);
  EXPECT_EQ(res.coloring.palette_size, base.palette_size + res.fresh_colors);
}

TEST(CycleClasses, DistinctLengthsGetDisjointPalettes) {
  // A triangle gadget and a square gadget, far apart.
  const auto square = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const auto g = graphs::disjoint_union(gadget(), square);
  const auto base = color_greedy_power(g, 2, 100, 3);
  const auto res = recolor_cycle_classes(g, base, 2);
  ASSERT_EQ(res.classes.size(), 2u);
  std::set<Color> first(res.classes[0].positional_coloring.begin(), res.classes[0].positional_coloring.end());
  for (auto col : res.classes[1].positional_coloring) EXPECT_EQ(first.count(col), 0u);
  for (const auto& cls : res.classes)
    for (auto col : cls.positional_coloring) EXPECT_GE(col, base.palette_size);
}

TEST(CycleClasses, RandomCubicBudget) {
  // Reported: classes and fresh colors for G(2000, 3) against the log^2 n scale.
  GenParams gp;
  gp.n = 2000;
  gp.r = 3;
  gp.seed = 1;
  const auto g = gen_regular_config(gp).graph;
  const auto params = regular_params(2000, 3);
  const auto base = color_greedy_power(g, 2 * params.k, params.q, 1);
  const auto res = recolor_cycle_classes(g, base, params.k);
  const double log2n = std::pow(std::log(2000.0), 2);
  RecordProperty("classes", static_cast<int>(res.classes.size()));
  RecordProperty("fresh_colors", static_cast<int>(res.fresh_colors));
  RecordProperty("ambiguous_roots", static_cast<int>(res.ambiguous_roots));
  std::cout << "classes=" << res.classes.size() << " fresh_colors=" << res.fresh_colors
            << " ambiguous_roots=" << res.ambiguous_roots << " log^2 n=" << log2n << '\n';
  res.coloring.check(g.num_edges());
  // Recolored edges are rainbow within each class.
  for (const auto& cls : res.classes) {
    std::set<Color> seen;
    for (auto e : cls.edges) EXPECT_TRUE(seen.insert(res.coloring.colors[e]).second);
  }
}
