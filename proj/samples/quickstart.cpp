// Generate a random cubic graph, color it greedily, and check sampled pairs.

#include <iostream>

#include "rainbow.hpp"

int main() {
  using namespace rainbow;
  GenParams gp;
  gp.n = 2000;
  gp.r = 3;
  gp.seed = 1;
  const Graph g = gen_regular_config(gp).graph;

  const auto params = regular_params(g.num_vertices(), 3);
  const auto base = color_greedy_power(g, 2 * static_cast<std::uint32_t>(params.k), params.q, 1);
  const auto rec = recolor_cycle_classes(g, base, static_cast<std::uint32_t>(params.k));

  const auto rep = verify_sampled(g, rec.coloring, 100, 1, default_search_max_len(g), 1'000'000);
  std::cout << "n=" << g.num_vertices() << " k=" << params.k << " Q=" << rec.coloring.palette_size
            << " cycle_classes=" << rec.classes.size() << '\n'
            << "rainbow pairs " << rep.pairs_connected << "/" << rep.pairs_checked
            << ", mean length " << rep.mean_witness_length() << '\n';
}
