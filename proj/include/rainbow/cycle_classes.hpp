#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

/// Roots sharing one short cycle C in their depth-k neighborhoods, with the
/// edges they induce recolored from a fresh palette by canonical position.
struct CycleClass {
  std::vector<Vertex> cycle;
  std::vector<Vertex> member_roots;       // sorted
  std::vector<EdgeId> edges;              // induced edges in canonical position order
  std::vector<Color> positional_coloring; // color of the edge at each position
  Color palette_begin = 0;
  std::size_t palette_size = 0;
  /// Equal cycle length as an earlier class but a different canonical shape;
  /// this class got its own fresh colors.
  bool shape_mismatch = false;

  std::size_t cycle_length() const { return cycle.size(); }
};

struct CycleRecoloring {
  EdgeColoring coloring;
  std::vector<CycleClass> classes;
  std::size_t fresh_colors = 0;
  std::size_t ambiguous_roots = 0;
  std::size_t shape_mismatches = 0;
};

namespace detail {

struct CanonicalForm {
  std::vector<std::uint64_t> code;  // comparable shape signature
  std::vector<EdgeId> edge_order;   // edges sorted by canonical position
};

/// Canonical traversal of the graph induced by `members`. Vertex labels come
/// from color refinement; traversal starts on the cycle at every rotation and
/// orientation and the lexicographically least signature wins.
inline CanonicalForm canonical_form(const Graph& g, const std::vector<Vertex>& members,
                                    const std::vector<Vertex>& cycle) {
  std::unordered_map<Vertex, std::uint32_t> local;
  for (std::uint32_t i = 0; i < members.size(); ++i) local.emplace(members[i], i);
  const std::size_t n = members.size();
  std::vector<std::vector<std::pair<std::uint32_t, EdgeId>>> adj(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& inc : g.neighbors(members[i])) {
      auto it = local.find(inc.neighbor);
      if (it != local.end()) adj[i].emplace_back(it->second, inc.edge);
    }
  }
  std::vector<std::uint64_t> label(n, 0);
  std::vector<char> on_cycle(n, 0);
  for (auto v : cycle)
    if (auto it = local.find(v); it != local.end()) on_cycle[it->second] = 1;
  for (std::size_t i = 0; i < n; ++i) label[i] = splitmix64(adj[i].size() * 2 + on_cycle[i]);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> nb;
      for (auto [j, e] : adj[i]) nb.push_back(label[j]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = splitmix64(label[i]);
      for (auto x : nb) h = splitmix64(h ^ x);
      next[i] = h;
    }
    label.swap(next);
  }

  std::vector<std::uint32_t> cyc;
  for (auto v : cycle)
    if (auto it = local.find(v); it != local.end()) cyc.push_back(it->second);

  auto traverse = [&](const std::vector<std::uint32_t>& start) {
    CanonicalForm f;
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> pos(n, kUnset);
    std::vector<std::uint32_t> order;
    auto visit = [&](std::uint32_t v) {
      pos[v] = static_cast<std::uint32_t>(order.size());
      order.push_back(v);
    };
    auto by_label = [&](std::uint32_t a, std::uint32_t b) {
      return label[a] != label[b] ? label[a] < label[b] : members[a] < members[b];
    };
    for (auto v : start) visit(v);
    std::vector<std::uint32_t> rest(n);
    for (std::uint32_t i = 0; i < n; ++i) rest[i] = i;
    std::sort(rest.begin(), rest.end(), by_label);
    std::size_t rest_next = 0;
    for (std::size_t head = 0; head < n; ++head) {
      if (head == order.size()) {  // disconnected remainder
        while (pos[rest[rest_next]] != kUnset) ++rest_next;
        visit(rest[rest_next]);
      }
      std::vector<std::uint32_t> fresh;
      for (auto [w, e] : adj[order[head]])
        if (pos[w] == kUnset) fresh.push_back(w);
      std::sort(fresh.begin(), fresh.end(), by_label);
      for (auto w : fresh) visit(w);
    }
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, EdgeId>> coded;
    for (std::uint32_t i = 0; i < n; ++i)
      for (auto [j, e] : adj[i])
        if (i < j) coded.push_back({{std::min(pos[i], pos[j]), std::max(pos[i], pos[j])}, e});
    std::sort(coded.begin(), coded.end());
    f.code.push_back(n);
    f.code.push_back(start.size());
    for (auto v : order) f.code.push_back(label[v]);
    for (auto& [key, e] : coded) {
      f.code.push_back((std::uint64_t{key.first} << 32) | key.second);
      f.edge_order.push_back(e);
    }
    return f;
  };

  CanonicalForm best;
  bool have = false;
  const std::size_t len = cyc.size();
  for (std::size_t s = 0; s < std::max<std::size_t>(len, 1); ++s) {
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<std::uint32_t> start;
      for (std::size_t i = 0; i < len; ++i) start.push_back(cyc[dir == 0 ? (s + i) % len : (s + len - i) % len]);
      auto f = traverse(start);
      if (!have || f.code < best.code) {
        best = std::move(f);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Recolors the neighborhoods of roots whose depth-k ball contains exactly one
/// cycle. Roots are grouped by that cycle C into classes V_C; the edges
/// induced by V_C are recolored by canonical position from fresh colors
/// appended after the base palette, one palette per cycle length, so classes
/// of equal length and shape are colored identically. A class whose shape
/// differs from the first class of its length gets separate fresh colors and
/// is flagged. Roots with two or more cycles in reach are counted and keep
/// the base coloring.
inline CycleRecoloring recolor_cycle_classes(const Graph& g, const EdgeColoring& base, std::uint32_t k) {
  base.check(g.num_edges());
  CycleRecoloring out;
  out.coloring = base;
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_cycle;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto nc = neighborhood_cycle(g, x, k);
    if (nc.kind == NeighborhoodCycle::Kind::Ambiguous) ++out.ambiguous_roots;
    if (nc.kind == NeighborhoodCycle::Kind::Unique) by_cycle[nc.cycle].push_back(x);
  }
  if (by_cycle.empty()) return out;

  struct Pending {
    CycleClass cls;
    std::vector<std::uint64_t> code;
  };
  std::vector<Pending> pending;
  for (auto& [cycle, roots] : by_cycle) {
    Pending p;
    p.cls.cycle = cycle;
    p.cls.member_roots = roots;
    auto form = detail::canonical_form(g, roots, cycle);
    p.cls.edges = std::move(form.edge_order);
    p.code = std::move(form.code);
    pending.push_back(std::move(p));
  }
  // Stable order: by cycle length, then by the cycle itself.
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return a.cls.cycle.size() < b.cls.cycle.size(); });

  Color next_fresh = static_cast<Color>(base.palette_size);
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::pair<Color, std::size_t>> palettes;
  std::map<std::size_t, Color> primary;  // cycle length -> first palette of that length
  for (auto& p : pending) {
    const std::size_t len = p.cls.cycle.size();
    const auto key = std::make_pair(len, p.code);
    auto it = palettes.find(key);
    if (it == palettes.end()) {
      it = palettes.emplace(key, std::make_pair(next_fresh, p.cls.edges.size())).first;
      next_fresh += static_cast<Color>(p.cls.edges.size());
    }
    const auto prim = primary.emplace(len, it->second.first).first;
    if (prim->second != it->second.first) {
      p.cls.shape_mismatch = true;
      ++out.shape_mismatches;
    }
    p.cls.palette_begin = it->second.first;
    p.cls.palette_size = it->second.second;
    for (std::size_t i = 0; i < p.cls.edges.size(); ++i) {
      const Color col = p.cls.palette_begin + static_cast<Color>(i);
      p.cls.positional_coloring.push_back(col);
      out.coloring.colors[p.cls.edges[i]] = col;
      out.coloring.provenance[p.cls.edges[i]] = Provenance::CycleClass;
    }
    out.classes.push_back(std::move(p.cls));
  }
  out.fresh_colors = next_fresh - base.palette_size;
  out.coloring.palette_size = next_fresh;
  return out;
}

}  // namespace rainbow
