#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/// Enumerates line-graph balls. Two distinct edges are at line distance
/// <= radius iff some endpoint of one lies within radius - 1 hops of an
/// endpoint of the other, so a ball is a bounded vertex BFS from both
/// endpoints followed by a sweep over incident edges. Scratch arrays are
/// reused across calls.
class LineBallScanner {
 public:
  explicit LineBallScanner(const Graph& g)
      : g_(&g), vertex_mark_(g.num_vertices(), 0), edge_mark_(g.num_edges(), 0) {}

  /// Calls fn(f) for every edge f != e within line distance <= radius of e.
  template <class Fn>
  void for_each(EdgeId e, std::uint32_t radius, Fn&& fn) {
    if (radius == 0) return;
    bump();
    const Edge& base = g_->edge(e);
    frontier_.assign({base.u, base.v});
    vertex_mark_[base.u] = vertex_mark_[base.v] = stamp_;
    edge_mark_[e] = stamp_;
    std::size_t level_begin = 0;
    for (std::uint32_t level = 0; level + 1 < radius; ++level) {
      const std::size_t level_end = frontier_.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (const auto& inc : g_->neighbors(frontier_[i])) {
          if (vertex_mark_[inc.neighbor] != stamp_) {
            vertex_mark_[inc.neighbor] = stamp_;
            frontier_.push_back(inc.neighbor);
          }
        }
      }
      level_begin = level_end;
      if (level_begin == frontier_.size()) break;
    }
    for (auto v : frontier_) {
      for (const auto& inc : g_->neighbors(v)) {
        if (edge_mark_[inc.edge] != stamp_) {
          edge_mark_[inc.edge] = stamp_;
          fn(inc.edge);
        }
      }
    }
  }

 private:
  void bump() {
    if (++stamp_ == 0) {
      std::fill(vertex_mark_.begin(), vertex_mark_.end(), 0);
      std::fill(edge_mark_.begin(), edge_mark_.end(), 0);
      stamp_ = 1;
    }
  }

  const Graph* g_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> vertex_mark_;
  std::vector<std::uint32_t> edge_mark_;
  std::vector<Vertex> frontier_;
};

/// Edges f != e within line-graph distance <= radius of e, sorted.
inline std::vector<EdgeId> line_distance_neighbors(const Graph& g, EdgeId e, std::uint32_t radius) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "radius must be >= 1");
  LineBallScanner scanner(g);
  std::vector<EdgeId> out;
  scanner.for_each(e, radius, [&](EdgeId f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedy proper coloring of the radius-th power of the line graph. Edges are
/// taken in id order; each gets a uniform color among those not on an
/// already-colored edge within line distance <= radius. Throws
/// PaletteExhausted naming the first edge that finds every color blocked.
inline EdgeColoring color_greedy_power(const Graph& g, std::uint32_t radius, std::size_t q, std::uint64_t seed) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "palette must have at least one color");
  const std::size_t m = g.num_edges();
  EdgeColoring c(m, q, Provenance::Greedy);
  Rng rng(derive_seed(seed, "color_greedy"));
  LineBallScanner scanner(g);
  std::vector<std::uint32_t> blocked(q, 0);
  std::uint32_t stamp = 0;
  for (EdgeId e = 0; e < m; ++e) {
    ++stamp;
    std::size_t blocked_count = 0;
    scanner.for_each(e, radius, [&](EdgeId f) {
      if (f < e && blocked[c.colors[f]] != stamp) {
        blocked[c.colors[f]] = stamp;
        ++blocked_count;
      }
    });
    if (blocked_count == q) {
      throw Error(ErrorCode::PaletteExhausted,
                  "edge " + std::to_string(e) + " sees all " + std::to_string(q) + " colors within radius " +
                      std::to_string(radius));
    }
    auto pick = rng.below(q - blocked_count);
    for (Color col = 0;; ++col) {
      if (blocked[col] == stamp) continue;
      if (pick-- == 0) {
        c.colors[e] = col;
        break;
      }
    }
  }
  return c;
}

/// First pair of equally colored edges within line distance <= radius.
inline std::optional<std::pair<EdgeId, EdgeId>> find_power_conflict(const Graph& g, const EdgeColoring& c,
                                                                     std::uint32_t radius) {
  LineBallScanner scanner(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::optional<std::pair<EdgeId, EdgeId>> hit;
    scanner.for_each(e, radius, [&](EdgeId f) {
      if (!hit && f > e && c.colors[f] == c.colors[e]) hit = std::make_pair(e, f);
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace rainbow
