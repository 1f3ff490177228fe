#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rainbow/verify.hpp"

namespace rainbow {

struct BruteForceResult {
  std::size_t rc = 0;
  EdgeColoring witness;
  std::size_t lower_bound = 0;  // max(pendant edges, diameter)
  std::uint64_t colorings_checked = 0;
};

inline std::size_t rc_lower_bound(const Graph& g) {
  const auto d = diameter(g);
  if (!d) throw Error(ErrorCode::NotConnected, "graph is disconnected");
  // Pendant edges need distinct colors. This equals Z1 except on K2, where
  // both pendant vertices share one edge.
  std::size_t pendant_edges = 0;
  for (const auto& e : g.edges()) pendant_edges += g.degree(e.u) == 1 || g.degree(e.v) == 1;
  return std::max<std::size_t>(pendant_edges, *d);
}

/// Rainbow connection number by exhaustive search. Colorings are enumerated
/// as restricted growth strings (the first edge gets color 0 and each new
/// color is the next unused id), one representative per color permutation.
/// The scan starts at max(pendant edges, diameter); past the first level only colorings
/// using exactly q colors are new. Throws Unresolved when rc > q_max.
inline BruteForceResult brute_force_rc(const Graph& g, std::size_t q_max) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is disconnected");
  BruteForceResult res;
  const std::size_t m = g.num_edges();
  res.lower_bound = rc_lower_bound(g);
  if (m == 0) {
    res.witness = EdgeColoring(0, 0);
    return res;
  }
  const std::size_t start = std::max<std::size_t>(1, res.lower_bound);
  VerifyOptions opt;
  opt.stop_on_failure = true;
  for (std::size_t q = start; q <= std::min(q_max, m); ++q) {
    const bool first_level = (q == start);
    std::vector<Color> colors(m, 0);
    std::vector<Color> prefix_max(m, 0);  // max color among colors[0..i]
    // Odometer over restricted growth strings with values < q.
    while (true) {
      const std::size_t used = prefix_max[m - 1] + 1;
      if (first_level ? used <= q : used == q) {
        ++res.colorings_checked;
        auto c = EdgeColoring::from_colors(colors, q);
        if (verify_all_pairs(g, c, VerifyMode::Exact, opt).all_connected()) {
          res.rc = q;
          res.witness = std::move(c);
          return res;
        }
      }
      std::size_t i = m - 1;
      while (i > 0 && (colors[i] == prefix_max[i - 1] + 1 || colors[i] + 1 >= q)) --i;
      if (i == 0) break;
      ++colors[i];
      prefix_max[i] = std::max(prefix_max[i - 1], colors[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        colors[j] = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }
  throw Error(ErrorCode::Unresolved, "rc exceeds q_max=" + std::to_string(q_max));
}

}  // namespace rainbow
