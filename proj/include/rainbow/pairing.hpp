#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

struct PathPair {
  std::uint32_t leaf1;  // node index in the first tree
  std::uint32_t leaf2;  // node index in the second tree
  std::vector<EdgeId> path1;  // root-to-leaf edges
  std::vector<EdgeId> path2;
};

struct PairingResult {
  std::vector<PathPair> pairs;
  std::size_t guaranteed = 0;        // (d-1)^l, or 2^floor(k/2) for the binary variant
  std::size_t matchings_built = 0;
  std::size_t bound_violations = 0;  // subsets breaking the expansion bound, summed over all H
  bool fallback_used = false;        // a recursive matching fell short; pairs come from the exact leaf matching
};

namespace detail {

/// Colors on the subtree strictly below each node, sorted.
inline std::vector<std::vector<Color>> subtree_colors(const RootedTree& t, const EdgeColoring& c) {
  std::vector<std::vector<Color>> below(t.nodes.size());
  for (auto i = static_cast<std::uint32_t>(t.nodes.size()); i-- > 1;) {
    const auto& nd = t.nodes[i];
    auto& up = below[nd.parent];
    up.insert(up.end(), below[i].begin(), below[i].end());
    up.push_back(c.colors[nd.parent_edge]);
  }
  for (auto& v : below) std::sort(v.begin(), v.end());
  return below;
}

inline bool intersects(const std::vector<Color>& a, const std::vector<Color>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

inline std::vector<Color> sorted_union(std::vector<Color> a, const std::vector<Color>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

inline void require_complete(const RootedTree& t, std::size_t d, const char* name) {
  for (const auto& nd : t.nodes) {
    const std::size_t want = nd.depth < t.target_depth ? d : 0;
    if (nd.children.size() != want)
      throw Error(ErrorCode::InvalidArgument, std::string(name) + " is not a complete " + std::to_string(d) +
                                                  "-ary tree at vertex " + std::to_string(nd.vertex));
  }
}

inline void require_pairable(const RootedTree& t1, const RootedTree& t2, std::size_t d, const EdgeColoring& c) {
  require_complete(t1, d, "first tree");
  require_complete(t2, d, "second tree");
  if (t1.target_depth != t2.target_depth) throw Error(ErrorCode::InvalidArgument, "trees differ in depth");
  for (const auto& nd : t1.nodes)
    if (t2.contains(nd.vertex)) throw Error(ErrorCode::InvalidArgument, "trees share vertex " + std::to_string(nd.vertex));
  for (const auto* t : {&t1, &t2})
    for (auto e : t->edges())
      if (e >= c.num_edges()) throw Error(ErrorCode::InvalidArgument, "tree edge outside coloring");
}

inline std::vector<Color> colors_of(const std::vector<EdgeId>& edges, const EdgeColoring& c) {
  std::vector<Color> out;
  for (auto e : edges) out.push_back(c.colors[e]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Revalidates every pair: root-to-leaf on both sides, distinct leaves per
/// side, rainbow union. Throws GuaranteeViolation otherwise.
inline void check_pairs(const RootedTree& t1, const RootedTree& t2, const EdgeColoring& c, PairingResult& res) {
  std::set<std::uint32_t> used1, used2;
  for (auto& p : res.pairs) {
    p.path1 = t1.root_path_edges(p.leaf1);
    p.path2 = t2.root_path_edges(p.leaf2);
    if (t1.nodes[p.leaf1].depth != t1.target_depth || t2.nodes[p.leaf2].depth != t2.target_depth)
      throw Error(ErrorCode::GuaranteeViolation, "paired node is not a leaf");
    if (!used1.insert(p.leaf1).second || !used2.insert(p.leaf2).second)
      throw Error(ErrorCode::GuaranteeViolation, "leaf reused within one tree");
    auto all = sorted_union(colors_of(p.path1, c), colors_of(p.path2, c));
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw Error(ErrorCode::GuaranteeViolation,
                  "pair ending at vertices " + std::to_string(t1.nodes[p.leaf1].vertex) + "/" +
                      std::to_string(t2.nodes[p.leaf2].vertex) + " has a repeated color");
  }
  if (res.pairs.size() < res.guaranteed)
    throw Error(ErrorCode::GuaranteeViolation, "found " + std::to_string(res.pairs.size()) + " pairs, guaranteed " +
                                                   std::to_string(res.guaranteed));
}

/// Short matching inside the recursion.
struct ShortMatching : Error {
  using Error::Error;
};

/// Largest set of leaf pairs, distinct per side, with rainbow unions: a
/// maximum matching over all leaf pairs.
inline std::vector<PathPair> exact_leaf_pairs(const RootedTree& t1, const RootedTree& t2, const EdgeColoring& c) {
  const auto l1 = t1.leaves();
  const auto l2 = t2.leaves();
  std::vector<std::vector<Color>> p1, p2;
  for (auto l : l1) p1.push_back(colors_of(t1.root_path_edges(l), c));
  for (auto l : l2) p2.push_back(colors_of(t2.root_path_edges(l), c));
  BipartiteMatrix h(l1.size(), std::vector<bool>(l2.size(), false));
  for (std::size_t i = 0; i < l1.size(); ++i)
    for (std::size_t j = 0; j < l2.size(); ++j) h[i][j] = !intersects(p1[i], p2[j]);
  std::vector<PathPair> out;
  for (auto [i, j] : bipartite_matching(h)) out.push_back({l1[i], l2[j], {}, {}});
  return out;
}

/// Runs the recursion; on a short matching replaces its pairs by the exact
/// leaf matching. The result is then revalidated against the guarantee.
template <class Rec>
void run_with_fallback(const RootedTree& t1, const RootedTree& t2, const EdgeColoring& c, PairingResult& res,
                       Rec&& rec) {
  try {
    rec(rec, 0, 0);
  } catch (const ShortMatching&) {
    res.pairs = exact_leaf_pairs(t1, t2, c);
    res.fallback_used = true;
  }
  check_pairs(t1, t2, c, res);
}

}  // namespace detail

/// Pairs root-to-leaf paths of two vertex-disjoint rainbow complete d-ary
/// trees so that each pair's union is rainbow, by recursive matching.
///
/// At a node pair (u, v) with children u_i, v_j and child-edge colors c_i,
/// c'_j, the bipartite graph H has (i, j) iff c_i does not occur on edge
/// (v, v_j) or below v_j, and c'_j does not occur on edge (u, u_i) or below
/// u_i. The expansion bound on H gives a matching of size >= d - 1; each
/// matched (i, j) recurses. This yields >= (d-1)^depth pairs.
///
/// If some matching falls short, the pairs come from a maximum matching over
/// all leaf pairs instead (fallback_used). Throws GuaranteeViolation if the
/// result still has fewer than (d-1)^depth pairs or a pair fails revalidation.
inline PairingResult pair_paths_lemcol(const RootedTree& t1, const RootedTree& t2, const EdgeColoring& c,
                                       std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "arity must be >= 2");
  detail::require_pairable(t1, t2, d, c);
  const auto below1 = detail::subtree_colors(t1, c);
  const auto below2 = detail::subtree_colors(t2, c);
  PairingResult res;
  res.guaranteed = 1;
  for (std::uint32_t i = 0; i < t1.target_depth; ++i) res.guaranteed *= (d - 1);

  auto rec = [&](auto& self, std::uint32_t u, std::uint32_t v) -> void {
    if (t1.nodes[u].depth == t1.target_depth) {
      res.pairs.push_back({u, v, {}, {}});
      return;
    }
    const auto& cu = t1.nodes[u].children;
    const auto& cv = t2.nodes[v].children;
    BipartiteMatrix h(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i) {
      const Color ci = c.colors[t1.nodes[cu[i]].parent_edge];
      const auto& side1 = below1[cu[i]];
      for (std::size_t j = 0; j < d; ++j) {
        const Color cj = c.colors[t2.nodes[cv[j]].parent_edge];
        const auto& side2 = below2[cv[j]];
        const bool ci_free = ci != cj && !std::binary_search(side2.begin(), side2.end(), ci);
        const bool cj_free = cj != ci && !std::binary_search(side1.begin(), side1.end(), cj);
        h[i][j] = ci_free && cj_free;
      }
    }
    ++res.matchings_built;
    res.bound_violations += hall_bound_violations(h);
    const auto m = bipartite_matching(h);
    if (m.size() + 1 < d)
      throw detail::ShortMatching(ErrorCode::GuaranteeViolation, "matching of size " + std::to_string(m.size()) + " below d-1=" +
                                                     std::to_string(d - 1) + " at vertices " +
                                                     std::to_string(t1.nodes[u].vertex) + "/" +
                                                     std::to_string(t2.nodes[v].vertex));
    for (auto [i, j] : m) self(self, cu[i], cv[j]);
  };
  detail::run_with_fallback(t1, t2, c, res, rec);
  return res;
}

/// Binary-tree variant: matches the four depth-two subtrees on each side,
/// two levels at a time, with (i, j) in H iff the colors on the two-edge
/// path to subtree i avoid subtree j together with its two-edge path, and
/// vice versa. Each such H has a matching of size >= 2; an odd final level
/// is matched one level deep (size >= 1). Yields >= 2^floor(k/2) pairs.
/// Short matchings fall back to the exact leaf matching as above.
inline PairingResult pair_paths_depth2(const RootedTree& t1, const RootedTree& t2, const EdgeColoring& c) {
  detail::require_pairable(t1, t2, 2, c);
  if (t1.target_depth < 2) throw Error(ErrorCode::InvalidArgument, "binary pairing needs depth >= 2");
  const auto below1 = detail::subtree_colors(t1, c);
  const auto below2 = detail::subtree_colors(t2, c);
  PairingResult res;
  res.guaranteed = std::size_t{1} << (t1.target_depth / 2);

  auto grandchildren = [](const RootedTree& t, std::uint32_t u) {
    std::vector<std::uint32_t> out;
    for (auto ch : t.nodes[u].children)
      for (auto gc : t.nodes[ch].children) out.push_back(gc);
    return out;
  };
  auto path_colors = [&](const RootedTree& t, std::uint32_t from, std::uint32_t to) {
    std::vector<Color> out;
    for (auto i = to; i != from; i = t.nodes[i].parent) out.push_back(c.colors[t.nodes[i].parent_edge]);
    std::sort(out.begin(), out.end());
    return out;
  };

  auto rec = [&](auto& self, std::uint32_t u, std::uint32_t v) -> void {
    const std::uint32_t remaining = t1.target_depth - t1.nodes[u].depth;
    if (remaining == 0) {
      res.pairs.push_back({u, v, {}, {}});
      return;
    }
    const bool two = remaining >= 2;
    const auto gu = two ? grandchildren(t1, u) : t1.nodes[u].children;
    const auto gv = two ? grandchildren(t2, v) : t2.nodes[v].children;
    const std::size_t width = gu.size();
    std::vector<std::vector<Color>> p1(width), p2(width), s1(width), s2(width);
    for (std::size_t i = 0; i < width; ++i) {
      p1[i] = path_colors(t1, u, gu[i]);
      p2[i] = path_colors(t2, v, gv[i]);
      s1[i] = detail::sorted_union(p1[i], below1[gu[i]]);
      s2[i] = detail::sorted_union(p2[i], below2[gv[i]]);
    }
    BipartiteMatrix h(width, std::vector<bool>(width, false));
    for (std::size_t i = 0; i < width; ++i)
      for (std::size_t j = 0; j < width; ++j)
        h[i][j] = !detail::intersects(p1[i], s2[j]) && !detail::intersects(p2[j], s1[i]);
    ++res.matchings_built;
    if (two) res.bound_violations += third_bound_violations(h);
    const auto m = bipartite_matching(h);
    const std::size_t need = two ? 2 : 1;
    if (m.size() < need)
      throw detail::ShortMatching(ErrorCode::GuaranteeViolation, "binary pairing found a matching of size " +
                                                     std::to_string(m.size()) + ", need " + std::to_string(need));
    for (auto [i, j] : m) self(self, gu[i], gv[j]);
  };
  detail::run_with_fallback(t1, t2, c, res, rec);
  return res;
}

}  // namespace rainbow
