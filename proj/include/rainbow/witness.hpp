#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rainbow/pairing.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct CandidatePath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

/// Path from a leaf of T_x through its extension tree, one crossing edge, and
/// the extension tree of a leaf of T_y.
struct Connector {
  std::uint32_t leaf_x;  // node index in tree_x
  std::uint32_t leaf_y;  // node index in tree_y
  std::vector<Vertex> path;
};

struct WitnessBundle {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  std::size_t arity = 0;
  std::uint32_t k = 0;
  std::uint32_t gamma = 0;
  RootedTree tree_x;  // pruned to `arity`
  RootedTree tree_y;
  std::vector<std::size_t> extension_sizes_x;  // vertices per extension tree, 0 if excluded
  std::vector<std::size_t> extension_sizes_y;
  std::size_t excluded_leaves_x = 0;
  std::size_t excluded_leaves_y = 0;
  std::vector<Connector> connectors;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> connector_index;
  /// x -> y paths for positionally matched leaves (leaf i of T_x with leaf i
  /// of T_y); colors unchecked.
  std::vector<CandidatePath> full_paths;

  std::size_t excluded_leaves() const { return excluded_leaves_x + excluded_leaves_y; }

  const Connector* connector(std::uint32_t leaf_x, std::uint32_t leaf_y) const {
    auto it = connector_index.find({leaf_x, leaf_y});
    return it == connector_index.end() ? nullptr : &connectors[it->second];
  }
};

struct WitnessOptions {
  /// A leaf is bad if its extension tree must skip an edge within this many
  /// levels.
  std::uint32_t bad_levels = 1;
};

namespace detail {

inline CandidatePath compose_path(const Graph& g, const RootedTree& tx, std::uint32_t leaf_x, const RootedTree& ty,
                                  std::uint32_t leaf_y, const std::vector<Vertex>& middle) {
  CandidatePath p;
  p.vertices = tx.root_path_vertices(leaf_x);
  p.vertices.insert(p.vertices.end(), middle.begin() + 1, middle.end());
  auto back = ty.root_path_vertices(leaf_y);
  p.vertices.insert(p.vertices.end(), back.rbegin() + 1, back.rend());
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) p.edges.push_back(g.edge_between(p.vertices[i], p.vertices[i + 1]));
  return p;
}

}  // namespace detail

/// Builds the two-tree structure joining x and y: T_x of depth k, T_y of
/// depth k grown around T_x, both pruned to the given arity; then, leaf by
/// leaf (T_x first), an extension BFS tree of depth gamma avoiding every
/// vertex already claimed. Leaves whose extension must skip an edge within
/// the first `bad_levels` levels are excluded. Connectors join extension
/// trees of the two sides by a single crossing edge; positionally matched
/// leaves with a connector yield the full x -> y paths.
///
/// Throws NoStructure when dist(x, y) <= 2k (the depth-k trees would meet)
/// or when either tree cannot be pruned to the arity.
inline WitnessBundle build_witness_paths(const Graph& g, Vertex x, Vertex y, std::uint32_t k, std::uint32_t gamma,
                                         std::size_t d, const WitnessOptions& opt = {}) {
  if (x == y) throw Error(ErrorCode::InvalidArgument, "x and y must differ");
  const auto dist = bfs_distances(g, x, 2 * k);
  if (dist[y] != kUnreached)
    throw Error(ErrorCode::NoStructure, "depth-" + std::to_string(k) + " trees of " + std::to_string(x) + " and " +
                                            std::to_string(y) + " overlap");
  WitnessBundle b;
  b.x = x;
  b.y = y;
  b.arity = d;
  b.k = k;
  b.gamma = gamma;
  try {
    b.tree_x = prune_to_arity(grow_bfs_tree(g, x, k, static_cast<double>(d)), d);
    std::unordered_set<Vertex> around_x;
    for (const auto& nd : b.tree_x.nodes) around_x.insert(nd.vertex);
    b.tree_y = prune_to_arity(grow_bfs_tree(g, y, k, static_cast<double>(d), around_x), d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Insufficient) throw;
    throw Error(ErrorCode::NoStructure, e.what());
  }

  constexpr std::uint32_t kFree = static_cast<std::uint32_t>(-1);
  constexpr std::uint32_t kCore = static_cast<std::uint32_t>(-2);
  std::vector<std::uint32_t> owner(g.num_vertices(), kFree);
  std::vector<Vertex> parent(g.num_vertices(), kNoVertex);
  for (const auto* t : {&b.tree_x, &b.tree_y})
    for (const auto& nd : t->nodes) owner[nd.vertex] = kCore;

  const auto leaves_x = b.tree_x.leaves();
  const auto leaves_y = b.tree_y.leaves();
  // Extension tree ids: 0..|Lx|-1 for T_x leaves, then |Lx|.. for T_y leaves.
  std::vector<std::vector<Vertex>> ext(leaves_x.size() + leaves_y.size());
  auto grow_extension = [&](std::uint32_t id, Vertex leaf, Vertex core_parent) -> bool {
    std::vector<Vertex>& members = ext[id];
    std::vector<std::uint32_t> depth{0};
    members.assign({leaf});
    owner[leaf] = id;
    parent[leaf] = core_parent;
    bool bad = false;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex v = members[head];
      if (depth[head] >= gamma) continue;
      for (const auto& inc : g.neighbors(v)) {
        const Vertex w = inc.neighbor;
        if (owner[w] == kFree) {
          owner[w] = id;
          parent[w] = v;
          members.push_back(w);
          depth.push_back(depth[head] + 1);
        } else if (w != parent[v] && depth[head] < opt.bad_levels) {
          bad = true;
        }
      }
    }
    if (bad) {
      for (std::size_t i = 1; i < members.size(); ++i) owner[members[i]] = kFree;
      owner[leaf] = kCore;
      members.clear();
    }
    return !bad;
  };
  auto core_parent = [](const RootedTree& t, std::uint32_t node) { return t.nodes[t.nodes[node].parent].vertex; };
  for (std::uint32_t i = 0; i < leaves_x.size(); ++i) {
    const bool ok = grow_extension(i, b.tree_x.nodes[leaves_x[i]].vertex, core_parent(b.tree_x, leaves_x[i]));
    b.excluded_leaves_x += !ok;
    b.extension_sizes_x.push_back(ext[i].size());
  }
  const auto offset = static_cast<std::uint32_t>(leaves_x.size());
  for (std::uint32_t i = 0; i < leaves_y.size(); ++i) {
    const bool ok =
        grow_extension(offset + i, b.tree_y.nodes[leaves_y[i]].vertex, core_parent(b.tree_y, leaves_y[i]));
    b.excluded_leaves_y += !ok;
    b.extension_sizes_y.push_back(ext[offset + i].size());
  }

  // Connectors: scan each x-side extension in BFS order; the first crossing
  // edge into a given y-side extension wins.
  auto climb = [&](Vertex v) {
    std::vector<Vertex> up{v};
    while (owner[up.back()] != kCore && parent[up.back()] != kNoVertex && owner[parent[up.back()]] != kCore)
      up.push_back(parent[up.back()]);
    return up;  // v ... extension root (a leaf of T_x or T_y)
  };
  for (std::uint32_t i = 0; i < leaves_x.size(); ++i) {
    for (auto v : ext[i]) {
      for (const auto& inc : g.neighbors(v)) {
        const auto o = owner[inc.neighbor];
        if (o == kFree || o == kCore || o < offset) continue;
        const std::uint32_t j = o - offset;
        const auto key = std::make_pair(leaves_x[i], leaves_y[j]);
        if (b.connector_index.count(key)) continue;
        auto left = climb(v);
        std::reverse(left.begin(), left.end());
        const auto right = climb(inc.neighbor);
        left.insert(left.end(), right.begin(), right.end());
        b.connector_index.emplace(key, b.connectors.size());
        b.connectors.push_back({leaves_x[i], leaves_y[j], std::move(left)});
      }
    }
  }

  // Positional pairing: the pruned trees are isomorphic and stored in BFS
  // order, so leaf i of T_x corresponds to leaf i of T_y.
  for (std::size_t i = 0; i < std::min(leaves_x.size(), leaves_y.size()); ++i) {
    if (const Connector* con = b.connector(leaves_x[i], leaves_y[i]))
      b.full_paths.push_back(detail::compose_path(g, b.tree_x, con->leaf_x, b.tree_y, con->leaf_y, con->path));
  }
  return b;
}

/// Edges of the full paths outside T_x and T_y must be pairwise disjoint
/// across paths.
inline bool full_paths_edge_disjoint(const WitnessBundle& b) {
  std::set<EdgeId> core;
  for (const auto* t : {&b.tree_x, &b.tree_y})
    for (auto e : t->edges()) core.insert(e);
  std::set<EdgeId> seen;
  for (const auto& p : b.full_paths) {
    std::set<EdgeId> own;
    for (auto e : p.edges)
      if (!core.count(e)) own.insert(e);
    for (auto e : own)
      if (!seen.insert(e).second) return false;
  }
  return true;
}

/// Shortest x-y path when dist(x, y) <= 2k, else empty. Under a proper
/// coloring of the line graph's 2k-th power any such path is rainbow.
inline std::vector<Vertex> direct_tree_path(const Graph& g, Vertex x, Vertex y, std::uint32_t k) {
  const auto dist = bfs_distances(g, x, 2 * k);
  if (dist[y] == kUnreached) return {};
  return shortest_path(g, x, y);
}

inline bool is_rainbow_tree(const RootedTree& t, const EdgeColoring& c) {
  std::set<Color> seen;
  for (auto e : t.edges())
    if (!seen.insert(c.colors[e]).second) return false;
  return true;
}

struct RainbowWitnessOutcome {
  std::optional<PathWitness> witness;
  std::size_t candidates_tried = 0;
  std::size_t tree_pairs = 0;       // pairs produced by the tree pairing
  bool pairing_used = false;        // false: trees not rainbow, positional pairs only
};

/// Candidate x -> y paths from the bundle, in order: the rainbow-union tree
/// pairs (binary variant when the arity is 2), then the positional pairs.
/// Returns the first candidate that is a rainbow simple path.
inline RainbowWitnessOutcome rainbow_witness_detailed(const Graph& g, const EdgeColoring& c, const WitnessBundle& b) {
  RainbowWitnessOutcome out;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
  if (is_rainbow_tree(b.tree_x, c) && is_rainbow_tree(b.tree_y, c)) {
    try {
      const auto res = (b.arity == 2 && b.k >= 2) ? pair_paths_depth2(b.tree_x, b.tree_y, c)
                                                  : pair_paths_lemcol(b.tree_x, b.tree_y, c, b.arity);
      for (const auto& p : res.pairs) order.emplace_back(p.leaf1, p.leaf2);
      out.tree_pairs = res.pairs.size();
      out.pairing_used = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GuaranteeViolation) throw;
    }
  }
  const auto lx = b.tree_x.leaves();
  const auto ly = b.tree_y.leaves();
  for (std::size_t i = 0; i < std::min(lx.size(), ly.size()); ++i) order.emplace_back(lx[i], ly[i]);
  for (auto [u, v] : order) {
    const Connector* con = b.connector(u, v);
    if (!con) continue;
    ++out.candidates_tried;
    auto path = detail::compose_path(g, b.tree_x, u, b.tree_y, v, con->path);
    auto w = make_witness(g, c, std::move(path.vertices));
    if (is_valid_rainbow_witness(g, c, w, b.x, b.y)) {
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

inline std::optional<PathWitness> rainbow_witness(const Graph& g, const EdgeColoring& c, Vertex x, Vertex y,
                                                  const WitnessBundle& b) {
  if (b.x != x || b.y != y) throw Error(ErrorCode::InvalidArgument, "bundle was built for another pair");
  return rainbow_witness_detailed(g, c, b).witness;
}

inline void write_bundle_diagnostics(std::ostream& out, const WitnessBundle& b) {
  auto list = [&](const char* key, const auto& values) {
    out << key << '=';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '\n';
  };
  out << "x=" << b.x << '\n' << "y=" << b.y << '\n' << "arity=" << b.arity << '\n'
      << "k=" << b.k << '\n' << "gamma=" << b.gamma << '\n';
  list("level_sizes_x", b.tree_x.level_sizes());
  list("level_sizes_y", b.tree_y.level_sizes());
  out << "bad_leaves_x=" << b.excluded_leaves_x << '\n' << "bad_leaves_y=" << b.excluded_leaves_y << '\n';
  std::vector<std::size_t> lengths;
  for (const auto& con : b.connectors) lengths.push_back(con.path.size() - 1);
  std::sort(lengths.begin(), lengths.end());
  out << "connectors=" << b.connectors.size() << '\n';
  if (!lengths.empty())
    out << "connector_length_min=" << lengths.front() << '\n' << "connector_length_max=" << lengths.back() << '\n';
  out << "sigma=" << b.full_paths.size() << '\n';
}

}  // namespace rainbow
