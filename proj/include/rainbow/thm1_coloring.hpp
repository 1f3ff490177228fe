#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/params.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

struct Thm1Coloring {
  EdgeColoring coloring;
  std::size_t z1 = 0;
  std::size_t pendant_colors = 0;
  /// Small vertices of degree >= 2 that received a Red/Blue pair.
  std::size_t v2_count = 0;
  /// V2 vertices with fewer than two usable edges (outside the whp regime).
  std::vector<Vertex> flagged_v2;

  Color red() const { return static_cast<Color>(coloring.palette_size - 2); }
  Color blue() const { return static_cast<Color>(coloring.palette_size - 1); }
};

/// Near-optimal coloring of G(n, p) at the connectivity threshold.
///
/// The palette has Q = max(Z1, q) + 2 colors. Pendant edges take the distinct
/// colors 0, 1, ... in order of their degree-1 endpoint. The last two colors
/// are Red and Blue: every small vertex of degree >= 2 colors its two
/// lowest-id non-pendant edges not yet Red/Blue with Red and Blue. Every other
/// edge gets a uniform color from [0, max(Z1, q)). Priority is
/// pendant > red_blue > random.
///
/// small_threshold defaults to log n / 100.
inline Thm1Coloring color_thm1(const Graph& g, const Thm1Params& params, std::uint64_t seed,
                               std::optional<double> small_threshold = std::nullopt) {
  if (g.num_vertices() < 2 || !is_connected(g))
    throw Error(ErrorCode::NotConnected, "thm1 coloring needs a connected graph on >= 2 vertices");
  const std::size_t m = g.num_edges();
  Thm1Coloring out;
  out.z1 = count_pendant_vertices(g);
  const std::size_t base = std::max(out.z1, params.q);
  out.coloring = EdgeColoring(m, base + 2, Provenance::Random);
  std::vector<char> assigned(m, 0);

  Color next_pendant = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    const EdgeId e = g.neighbors(v)[0].edge;
    if (assigned[e]) continue;  // pendant at both ends: one color
    out.coloring.colors[e] = next_pendant++;
    out.coloring.provenance[e] = Provenance::Pendant;
    assigned[e] = 1;
  }
  out.pendant_colors = next_pendant;

  const double threshold = small_threshold.value_or(default_small_threshold(g.num_vertices()));
  const Color reserved[2] = {out.red(), out.blue()};
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) < 2 || static_cast<double>(g.degree(u)) >= threshold) continue;
    ++out.v2_count;
    std::vector<EdgeId> usable;
    for (const auto& inc : g.neighbors(u))
      if (!assigned[inc.edge]) usable.push_back(inc.edge);
    std::sort(usable.begin(), usable.end());
    if (usable.size() < 2) out.flagged_v2.push_back(u);
    for (std::size_t i = 0; i < std::min<std::size_t>(2, usable.size()); ++i) {
      out.coloring.colors[usable[i]] = reserved[i];
      out.coloring.provenance[usable[i]] = Provenance::RedBlue;
      assigned[usable[i]] = 1;
    }
  }

  Rng rng(derive_seed(seed, "color_thm1"));
  for (EdgeId e = 0; e < m; ++e) {
    if (!assigned[e]) out.coloring.colors[e] = static_cast<Color>(rng.below(base));
  }
  return out;
}

}  // namespace rainbow
