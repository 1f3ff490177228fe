#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// BFS tree stored as nodes in BFS order. Node 0 is the root.
struct RootedTree {
  struct Node {
    Vertex vertex;
    std::uint32_t parent;  // node index; kNoParent for the root
    EdgeId parent_edge;
    std::uint32_t depth;
    std::vector<std::uint32_t> children;  // node indices, increasing vertex id
    std::uint32_t bad_edges = 0;          // edges skipped into the tree or forbidden set
  };
  static constexpr std::uint32_t kNoParent = static_cast<std::uint32_t>(-1);

  std::vector<Node> nodes;
  std::uint32_t target_depth = 0;
  std::unordered_map<Vertex, std::uint32_t> index;  // vertex -> node
  /// Set when some non-leaf has fewer usable children than required.
  std::optional<Vertex> shortfall;

  Vertex root() const { return nodes.front().vertex; }
  std::size_t size() const { return nodes.size(); }
  bool contains(Vertex v) const { return index.count(v) != 0; }

  /// Nodes at the target depth, in BFS order.
  std::vector<std::uint32_t> leaves() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].depth == target_depth) out.push_back(i);
    return out;
  }

  std::vector<std::size_t> level_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& nd : nodes) {
      if (sizes.size() <= nd.depth) sizes.resize(nd.depth + 1, 0);
      ++sizes[nd.depth];
    }
    return sizes;
  }

  /// Edge ids from the root down to `node`.
  std::vector<EdgeId> root_path_edges(std::uint32_t node) const {
    std::vector<EdgeId> out;
    for (auto i = node; nodes[i].parent != kNoParent; i = nodes[i].parent) out.push_back(nodes[i].parent_edge);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Vertex sequence from the root down to `node`.
  std::vector<Vertex> root_path_vertices(std::uint32_t node) const {
    std::vector<Vertex> out;
    for (auto i = node; i != kNoParent; i = nodes[i].parent) out.push_back(nodes[i].vertex);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    for (const auto& nd : nodes)
      if (nd.parent != kNoParent) out.push_back(nd.parent_edge);
    return out;
  }
};

/// BFS from root truncated at `depth`. Edges into vertices already in the
/// tree or in `forbidden` are skipped and counted as bad on the exploring
/// node (the edge back to the parent is not counted). If a node above the
/// last level ends with fewer than min_branching children, `shortfall` names
/// the first such vertex.
inline RootedTree grow_bfs_tree(const Graph& g, Vertex root, std::uint32_t depth, double min_branching,
                                const std::unordered_set<Vertex>& forbidden = {}) {
  if (forbidden.count(root)) throw Error(ErrorCode::InvalidArgument, "root is forbidden");
  RootedTree t;
  t.target_depth = depth;
  t.nodes.push_back({root, RootedTree::kNoParent, kNoEdge, 0, {}, 0});
  t.index.emplace(root, 0);
  for (std::uint32_t head = 0; head < t.nodes.size(); ++head) {
    if (t.nodes[head].depth >= depth) continue;
    const Vertex v = t.nodes[head].vertex;
    const EdgeId up = t.nodes[head].parent_edge;
    for (const auto& inc : g.neighbors(v)) {
      if (inc.edge == up) continue;
      if (forbidden.count(inc.neighbor) || t.index.count(inc.neighbor)) {
        ++t.nodes[head].bad_edges;
        continue;
      }
      const auto id = static_cast<std::uint32_t>(t.nodes.size());
      t.index.emplace(inc.neighbor, id);
      t.nodes.push_back({inc.neighbor, head, inc.edge, t.nodes[head].depth + 1, {}, 0});
      t.nodes[head].children.push_back(id);
    }
    if (!t.shortfall && static_cast<double>(t.nodes[head].children.size()) < min_branching) t.shortfall = v;
  }
  return t;
}

/// Keeps the d lowest-id children of every node above the last level,
/// producing the complete d-ary tree of the same depth. Throws Insufficient
/// when a kept node has fewer than d children.
inline RootedTree prune_to_arity(const RootedTree& t, std::size_t d) {
  RootedTree out;
  out.target_depth = t.target_depth;
  const auto& root = t.nodes.front();
  out.nodes.push_back({root.vertex, RootedTree::kNoParent, kNoEdge, 0, {}, root.bad_edges});
  out.index.emplace(root.vertex, 0);
  std::vector<std::uint32_t> source{0};  // out node -> t node
  for (std::uint32_t head = 0; head < out.nodes.size(); ++head) {
    if (out.nodes[head].depth >= t.target_depth) continue;
    const auto& src = t.nodes[source[head]];
    if (src.children.size() < d) {
      throw Error(ErrorCode::Insufficient, "vertex " + std::to_string(src.vertex) + " has " +
                                               std::to_string(src.children.size()) + " children, need " +
                                               std::to_string(d));
    }
    for (std::size_t i = 0; i < d; ++i) {
      const auto& child = t.nodes[src.children[i]];
      const auto id = static_cast<std::uint32_t>(out.nodes.size());
      out.nodes.push_back({child.vertex, head, child.parent_edge, child.depth, {}, child.bad_edges});
      out.index.emplace(child.vertex, id);
      out.nodes[head].children.push_back(id);
      source.push_back(src.children[i]);
    }
  }
  return out;
}

}  // namespace rainbow
