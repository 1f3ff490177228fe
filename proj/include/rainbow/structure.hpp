#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from source; kUnreached where unreachable or beyond limit.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source,
                                                std::uint32_t limit = kUnreached) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreached);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (dist[v] >= limit) continue;
    for (const auto& inc : g.neighbors(v)) {
      if (dist[inc.neighbor] == kUnreached) {
        dist[inc.neighbor] = dist[v] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreached; });
}

/// Shortest path as a vertex sequence, empty if unreachable.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> parent(g.num_vertices(), kNoVertex);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size() && parent[to] == kNoVertex; ++head) {
    for (const auto& inc : g.neighbors(queue[head])) {
      if (parent[inc.neighbor] == kNoVertex) {
        parent[inc.neighbor] = queue[head];
        queue.push_back(inc.neighbor);
      }
    }
  }
  if (parent[to] == kNoVertex) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

enum class DiameterMode { Exact, DoubleSweep };

/// Diameter, or nullopt when disconnected. Exact mode runs a BFS from every
/// vertex; DoubleSweep returns the eccentricity of the vertex farthest from
/// vertex 0, a lower bound.
inline std::optional<std::uint32_t> diameter(const Graph& g, DiameterMode mode = DiameterMode::Exact) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  auto eccentricity = [&](Vertex s, Vertex* farthest) -> std::optional<std::uint32_t> {
    const auto dist = bfs_distances(g, s);
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreached) return std::nullopt;
      if (dist[v] > best) {
        best = dist[v];
        if (farthest) *farthest = v;
      }
    }
    return best;
  };
  if (mode == DiameterMode::DoubleSweep) {
    Vertex far = 0;
    if (!eccentricity(0, &far)) return std::nullopt;
    return eccentricity(far, nullptr);
  }
  std::uint32_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    auto e = eccentricity(s, nullptr);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

/// log n / log log n, the distance scale at the connectivity threshold.
/// Requires n >= 16 so that log log n > 1.
inline double scale_L(std::size_t n) {
  if (n < 16) throw Error(ErrorCode::InvalidArgument, "scale L needs n >= 16");
  const double ln = std::log(static_cast<double>(n));
  return ln / std::log(ln);
}

inline double default_small_threshold(std::size_t n) {
  return std::log(static_cast<double>(std::max<std::size_t>(n, 2))) / 100.0;
}

struct DegreeStats {
  std::size_t z1 = 0;
  std::vector<Vertex> small_vertices;
  std::map<std::size_t, std::size_t> histogram;
  double small_threshold = 0.0;
};

inline DegreeStats degree_stats(const Graph& g, double small_threshold) {
  DegreeStats s;
  s.small_threshold = small_threshold;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto d = g.degree(v);
    ++s.histogram[d];
    if (d == 1) ++s.z1;
    if (static_cast<double>(d) < small_threshold) s.small_vertices.push_back(v);
  }
  return s;
}

inline std::size_t count_pendant_vertices(const Graph& g) {
  std::size_t z1 = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) z1 += g.degree(v) == 1;
  return z1;
}

/// All pairs (a, b), a < b, of small vertices at distance <= dist_bound.
/// An empty result means no two small vertices lie that close.
inline std::vector<std::pair<Vertex, Vertex>> check_small_separation(const Graph& g, double small_threshold,
                                                                     std::uint32_t dist_bound) {
  const auto small = degree_stats(g, small_threshold).small_vertices;
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto s : small) {
    const auto dist = bfs_distances(g, s, dist_bound);
    for (auto t : small) {
      if (t > s && dist[t] != kUnreached && dist[t] <= dist_bound) out.emplace_back(s, t);
    }
  }
  return out;
}

/// Vertices within `depth` of x, in BFS order.
inline std::vector<Vertex> ball(const Graph& g, Vertex x, std::uint32_t depth) {
  std::vector<Vertex> out{x};
  std::map<Vertex, std::uint32_t> seen{{x, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Vertex v = out[head];
    const auto d = seen[v];
    if (d >= depth) continue;
    for (const auto& inc : g.neighbors(v)) {
      if (seen.emplace(inc.neighbor, d + 1).second) out.push_back(inc.neighbor);
    }
  }
  return out;
}

struct DensityViolation {
  Vertex center;
  std::size_t ball_size;
  std::size_t ball_edges;
};

/// Reports each vertex x whose radius-ball S satisfies e[S] >= |S| + excess.
inline std::vector<DensityViolation> check_local_density(const Graph& g, std::uint32_t radius, long long excess) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "radius must be >= 1");
  std::vector<DensityViolation> out;
  std::vector<char> in_ball(g.num_vertices(), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto members = ball(g, x, radius);
    for (auto v : members) in_ball[v] = 1;
    std::size_t inside = 0;
    for (auto v : members)
      for (const auto& inc : g.neighbors(v)) inside += (inc.neighbor > v && in_ball[inc.neighbor]);
    for (auto v : members) in_ball[v] = 0;
    if (static_cast<long long>(inside) >= static_cast<long long>(members.size()) + excess)
      out.push_back({x, members.size(), inside});
  }
  return out;
}

struct NeighborhoodCycle {
  enum class Kind { None, Unique, Ambiguous };
  Kind kind = Kind::None;
  /// For Unique: cycle vertices, starting at the smallest id and heading to
  /// its smaller cycle neighbor.
  std::vector<Vertex> cycle;
};

/// Classifies the subgraph induced by the depth-ball around x: acyclic,
/// exactly one cycle (returned), or two or more independent cycles.
inline NeighborhoodCycle neighborhood_cycle(const Graph& g, Vertex x, std::uint32_t depth) {
  const auto verts = ball(g, x, depth);
  std::set<Vertex> members(verts.begin(), verts.end());
  std::map<Vertex, std::vector<Vertex>> adj;
  std::size_t edges = 0;
  for (auto v : verts) {
    auto& list = adj[v];
    for (const auto& inc : g.neighbors(v)) {
      if (members.count(inc.neighbor)) {
        list.push_back(inc.neighbor);
        edges += inc.neighbor > v;
      }
    }
  }
  NeighborhoodCycle out;
  // The ball is connected, so the cycle rank is e - v + 1.
  const long long rank = static_cast<long long>(edges) - static_cast<long long>(verts.size()) + 1;
  if (rank <= 0) return out;
  if (rank >= 2) {
    out.kind = NeighborhoodCycle::Kind::Ambiguous;
    return out;
  }
  // Unicyclic: peel leaves down to the 2-core, which is the cycle.
  std::map<Vertex, std::size_t> deg;
  std::vector<Vertex> stack;
  for (auto& [v, list] : adj) {
    deg[v] = list.size();
    if (list.size() <= 1) stack.push_back(v);
  }
  std::set<Vertex> removed;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!removed.insert(v).second) continue;
    for (auto w : adj[v]) {
      if (!removed.count(w) && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<Vertex> core;
  for (auto v : verts)
    if (!removed.count(v)) core.push_back(v);
  std::sort(core.begin(), core.end());
  auto core_neighbors = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (auto w : adj[v])
      if (!removed.count(w)) nb.push_back(w);
    std::sort(nb.begin(), nb.end());
    return nb;
  };
  out.kind = NeighborhoodCycle::Kind::Unique;
  Vertex prev = core.front(), cur = core_neighbors(prev).front();
  out.cycle.push_back(prev);
  while (cur != core.front()) {
    out.cycle.push_back(cur);
    const auto nb = core_neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace rainbow
