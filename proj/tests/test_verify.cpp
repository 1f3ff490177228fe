#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow.hpp"

using namespace rainbow;

namespace {

EdgeColoring uniform(const Graph& g, Color col, std::size_t q) {
  return EdgeColoring::from_colors(std::vector<Color>(g.num_edges(), col), q);
}

EdgeColoring distinct(const Graph& g) {
  std::vector<Color> cols(g.num_edges());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<Color>(i);
  return EdgeColoring::from_colors(cols, cols.size());
}

}  // namespace

TEST(RainbowPath, C4Examples) {
  // Canonical C4 edges: 0-1, 0-3, 1-2, 2-3.
  const auto g = graphs::cycle(4);
  ASSERT_EQ(g.edge(1), (Edge{0, 3}));
  const auto c = EdgeColoring::from_colors({0, 1, 1, 0}, 2);
  const auto w = rainbow_path_exact(g, c, 0, 2, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length(), 2u);
  EXPECT_TRUE(is_valid_rainbow_witness(g, c, *w, 0, 2));
  EXPECT_TRUE(verify_all_pairs(g, c, VerifyMode::Exact).all_connected());
  const auto bad = EdgeColoring::from_colors({0, 0, 0, 0}, 1);
  EXPECT_FALSE(rainbow_path_exact(g, bad, 0, 2, 3));
  EXPECT_EQ(verify_all_pairs(g, bad, VerifyMode::Exact).pairs_connected, 4u);
}

TEST(RainbowPath, K5SingleColor) {
  const auto g = graphs::complete(5);
  const auto rep = verify_all_pairs(g, uniform(g, 0, 1), VerifyMode::Exact);
  EXPECT_EQ(rep.pairs_checked, 10u);
  EXPECT_TRUE(rep.all_connected());
  EXPECT_EQ(rep.max_witness_length, 1u);
}

TEST(RainbowPath, P4Uniform) {
  const auto g = graphs::path(4);
  const auto rep = verify_all_pairs(g, uniform(g, 0, 1), VerifyMode::Exact);
  EXPECT_EQ(rep.pairs_checked, 6u);
  EXPECT_EQ(rep.pairs_connected, 3u);
  EXPECT_DOUBLE_EQ(rep.success_rate(), 0.5);
  const auto s = verify_all_pairs(g, uniform(g, 0, 1), VerifyMode::Search);
  EXPECT_EQ(s.pairs_connected, 3u);
}

TEST(RainbowPath, StarAndK4Distinct) {
  const auto star = graphs::star(5);
  const auto a = verify_all_pairs(star, distinct(star), VerifyMode::Exact);
  EXPECT_EQ(a.pairs_checked, 15u);
  EXPECT_EQ(a.pairs_connected, 15u);
  const auto k4 = graphs::complete(4);
  const auto b = verify_all_pairs(k4, distinct(k4), VerifyMode::Exact);
  EXPECT_EQ(b.pairs_connected, 6u);
}

TEST(RainbowPath, WitnessValidityChecks) {
  const auto g = graphs::path(3);
  const auto c = EdgeColoring::from_colors({0, 1}, 2);
  auto w = make_witness(g, c, {0, 1, 2});
  EXPECT_TRUE(is_valid_rainbow_witness(g, c, w, 0, 2));
  EXPECT_FALSE(is_valid_rainbow_witness(g, c, w, 0, 1));
  const auto same = EdgeColoring::from_colors({1, 1}, 2);
  EXPECT_FALSE(is_valid_rainbow_witness(g, same, make_witness(g, same, {0, 1, 2}), 0, 2));
}

TEST(RainbowPath, GuardError) {
  const auto g = graphs::path(30);
  const auto c = distinct(g);
  try {
    rainbow_path_exact(g, c, 0, 29, 29);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Guard);
  }
  EXPECT_TRUE(rainbow_path_exact(g, c, 0, 20, 20));
  EXPECT_TRUE(rainbow_path_search(g, c, 0, 29, 29, 1000, 0));
}

TEST(RainbowPath, ExactMatchesOracle) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Rng rng(derive_seed(seed, "verify_oracle"));
    const std::size_t n = 4 + rng.below(4);
    GenParams gp;
    gp.n = n;
    gp.p = 0.5;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    if (g.num_edges() == 0) continue;
    const std::size_t q = 1 + rng.below(4);
    std::vector<Color> cols(g.num_edges());
    for (auto& col : cols) col = static_cast<Color>(rng.below(q));
    const auto c = EdgeColoring::from_colors(cols, q);
    const auto r = oracle::raw(g);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        for (std::size_t len : {2u, 3u, static_cast<unsigned>(n - 1)}) {
          const bool expect = oracle::rainbow_path_exists(r, cols, x, y, len);
          const auto w = rainbow_path_exact(g, c, x, y, len);
          ASSERT_EQ(w.has_value(), expect) << seed << ' ' << x << ' ' << y << ' ' << len;
          if (w) EXPECT_TRUE(is_valid_rainbow_witness(g, c, *w, x, y));
          const auto s = rainbow_path_search(g, c, x, y, len, 1'000'000, seed);
          EXPECT_EQ(s.has_value(), expect);
          if (s) EXPECT_TRUE(is_valid_rainbow_witness(g, c, *s, x, y));
          ++checked;
        }
    EXPECT_EQ(verify_all_pairs(g, c, VerifyMode::Exact).all_connected(), oracle::rainbow_connected(r, cols));
  }
  EXPECT_GT(checked, 1000u);
}

TEST(RainbowPath, ExactIsShortest) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams gp;
    gp.n = 7;
    gp.p = 0.6;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    if (!is_connected(g)) continue;
    Rng rng(seed);
    std::vector<Color> cols(g.num_edges());
    for (auto& col : cols) col = static_cast<Color>(rng.below(3));
    const auto c = EdgeColoring::from_colors(cols, 3);
    const auto r = oracle::raw(g);
    for (Vertex y = 1; y < 7; ++y) {
      const auto w = rainbow_path_exact(g, c, 0, y, 6);
      if (!w) continue;
      EXPECT_TRUE(oracle::rainbow_path_exists(r, cols, 0, y, w->length()));
      if (w->length() > 1) EXPECT_FALSE(oracle::rainbow_path_exists(r, cols, 0, y, w->length() - 1));
    }
  }
}

TEST(RainbowPath, SearchBudgetIsReported) {
  GenParams gp;
  gp.n = 200;
  gp.r = 3;
  gp.seed = 1;
  const auto g = gen_regular_config(gp).graph;
  const auto c = uniform(g, 0, 1);
  const auto out = rainbow_path_search_detailed(g, c, 0, 150, 40, 5, 0);
  if (!out.witness) EXPECT_TRUE(out.budget_exhausted || out.expansions <= 5);
  EXPECT_LE(out.expansions, 5u);
}

TEST(RainbowPath, SampledDeterministic) {
  GenParams gp;
  gp.n = 300;
  gp.r = 4;
  gp.seed = 3;
  const auto g = gen_regular_config(gp).graph;
  const auto c = color_greedy_power(g, 4, 810, 1);
  const auto a = verify_sampled(g, c, 50, 7, 20, 100000, true);
  const auto b = verify_sampled(g, c, 50, 7, 20, 100000, true);
  EXPECT_EQ(a.pairs_checked, 50u);
  EXPECT_EQ(a.pairs_connected, b.pairs_connected);
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    EXPECT_EQ(a.outcomes[i].x, b.outcomes[i].x);
    EXPECT_EQ(a.outcomes[i].y, b.outcomes[i].y);
    if (a.outcomes[i].witness) EXPECT_EQ(a.outcomes[i].witness->vertices, b.outcomes[i].witness->vertices);
  }
  EXPECT_EQ(sample_pairs(10, 100, 1).size(), 45u);
}

TEST(BruteRc, Examples) {
  EXPECT_EQ(brute_force_rc(graphs::complete(3), 6).rc, 1u);
  EXPECT_EQ(brute_force_rc(graphs::complete(4), 6).rc, 1u);
  EXPECT_EQ(brute_force_rc(graphs::path(4), 6).rc, 3u);
  EXPECT_EQ(brute_force_rc(graphs::cycle(5), 6).rc, 3u);
  EXPECT_EQ(brute_force_rc(graphs::cycle(6), 6).rc, 3u);
  EXPECT_EQ(brute_force_rc(graphs::star(4), 6).rc, 4u);
  EXPECT_EQ(brute_force_rc(graphs::petersen(), 15).lower_bound, 2u);
  EXPECT_THROW(brute_force_rc(graphs::path(6), 3), Error);
  EXPECT_THROW(brute_force_rc(Graph::from_edges(4, {{0, 1}, {2, 3}}), 4), Error);
}

TEST(BruteRc, CliquesAndTreesCharacterization) {
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(brute_force_rc(graphs::complete(n), 10).rc, 1u);
  // K2 has Z1 = 2 but one edge.
  EXPECT_EQ(count_pendant_vertices(graphs::path(2)), 2u);
  EXPECT_EQ(rc_lower_bound(graphs::path(2)), 1u);
  for (auto t : {graphs::path(5), graphs::star(5), graphs::complete_tree(2, 2)})
    EXPECT_EQ(brute_force_rc(t, 10).rc, t.num_vertices() - 1);
}

TEST(BruteRc, MatchesOracle) {
  std::size_t graphs_checked = 0;
  for (std::uint64_t seed = 0; seed < 300 && graphs_checked < 200; ++seed) {
    Rng rng(derive_seed(seed, "brute_oracle"));
    GenParams gp;
    gp.n = 3 + rng.below(4);
    gp.p = 0.55;
    gp.seed = seed;
    const auto g = gen_gnp(gp).graph;
    if (!is_connected(g) || g.num_edges() > 9) continue;
    const auto res = brute_force_rc(g, g.num_edges());
    EXPECT_EQ(res.rc, oracle::rc(g)) << seed;
    EXPECT_GE(res.rc, res.lower_bound);
    EXPECT_TRUE(oracle::rainbow_connected(oracle::raw(g), res.witness.colors));
    ++graphs_checked;
  }
  EXPECT_GE(graphs_checked, 200u);
}
