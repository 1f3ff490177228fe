#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;
  std::vector<Color> color_set;  // sorted

  std::size_t length() const { return edge_ids.size(); }
};

/// Builds a witness from a vertex sequence; throws if consecutive vertices
/// are not adjacent.
inline PathWitness make_witness(const Graph& g, const EdgeColoring& c, std::vector<Vertex> vertices) {
  PathWitness w;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const EdgeId e = g.edge_between(vertices[i], vertices[i + 1]);
    if (e == kNoEdge)
      throw Error(ErrorCode::InvalidArgument, "vertices " + std::to_string(vertices[i]) + " and " +
                                                  std::to_string(vertices[i + 1]) + " are not adjacent");
    w.edge_ids.push_back(e);
    w.color_set.push_back(c.colors[e]);
  }
  std::sort(w.color_set.begin(), w.color_set.end());
  w.color_set.erase(std::unique(w.color_set.begin(), w.color_set.end()), w.color_set.end());
  w.vertices = std::move(vertices);
  return w;
}

/// True iff w is a simple x-y path in g whose edges carry distinct colors and
/// whose recorded edges and color set match the graph and coloring.
inline bool is_valid_rainbow_witness(const Graph& g, const EdgeColoring& c, const PathWitness& w, Vertex x, Vertex y) {
  if (w.vertices.empty() || w.vertices.front() != x || w.vertices.back() != y) return false;
  if (w.edge_ids.size() + 1 != w.vertices.size()) return false;
  std::set<Vertex> seen_v(w.vertices.begin(), w.vertices.end());
  if (seen_v.size() != w.vertices.size()) return false;
  std::set<Color> seen_c;
  for (std::size_t i = 0; i < w.edge_ids.size(); ++i) {
    const EdgeId e = w.edge_ids[i];
    if (e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (!(ed.has(w.vertices[i]) && ed.other(w.vertices[i]) == w.vertices[i + 1])) return false;
    if (!seen_c.insert(c.colors[e]).second) return false;
  }
  return std::vector<Color>(seen_c.begin(), seen_c.end()) == w.color_set;
}

/// Exact mode guard: color subsets are bit-sets over at most this many colors
/// unless paths are at most this long.
inline constexpr std::size_t kExactGuard = 24;

namespace detail {

/// Breadth-first search over (vertex, used-color-set) states from a source.
/// Shortest rainbow walks are simple paths (cutting a loop keeps the colors
/// distinct), so the first arrival at each vertex is a shortest rainbow path.
class ExactRainbowBfs {
 public:
  ExactRainbowBfs(const Graph& g, const EdgeColoring& c, std::size_t max_len) : g_(g), c_(c) {
    c.check(g.num_edges());
    if (c.palette_size > kExactGuard && max_len > kExactGuard)
      throw Error(ErrorCode::Guard, "exact search with Q=" + std::to_string(c.palette_size) +
                                        " and max_len=" + std::to_string(max_len) + " exceeds the bound " +
                                        std::to_string(kExactGuard));
    max_len_ = std::min<std::size_t>(max_len, g.num_vertices() ? g.num_vertices() - 1 : 0);
    // Compact the colors in use so subsets fit a 64-bit mask whenever possible.
    std::vector<Color> used(c.colors.begin(), c.colors.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    compact_.assign(c.palette_size, 0);
    for (std::size_t i = 0; i < used.size(); ++i) compact_[used[i]] = static_cast<Color>(i);
    use_mask_ = used.size() <= 64;
  }

  /// Runs from `source`. When target is set, stops once it is reached.
  /// Returns, per vertex, the state index of its first arrival.
  std::vector<std::uint32_t> run(Vertex source, std::optional<Vertex> target) {
    states_.clear();
    const std::size_t n = g_.num_vertices();
    std::vector<std::uint32_t> first(n, kNone);
    states_.push_back({source, kNone, kNoEdge, 0});
    sets_.clear();
    sets_.emplace_back();
    masks_.assign(1, 0);
    first[source] = 0;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;  // hash -> state ids
    auto key_hash = [&](Vertex v, std::uint32_t id) {
      std::uint64_t h = splitmix64(v);
      if (use_mask_) return splitmix64(h ^ masks_[id]);
      for (auto col : sets_[id]) h = splitmix64(h ^ col);
      return h;
    };
    auto same_set = [&](std::uint32_t a, std::uint32_t b) {
      return use_mask_ ? masks_[a] == masks_[b] : sets_[a] == sets_[b];
    };
    seen[key_hash(source, 0)].push_back(0);
    if (target && *target == source) return first;
    for (std::uint32_t head = 0; head < states_.size(); ++head) {
      const State cur = states_[head];
      if (cur.length >= max_len_) continue;
      for (const auto& inc : g_.neighbors(cur.vertex)) {
        const Color col = compact_[c_.colors[inc.edge]];
        if (contains(head, col)) continue;
        const auto id = static_cast<std::uint32_t>(states_.size());
        states_.push_back({inc.neighbor, head, inc.edge, cur.length + 1});
        extend(head, col);
        auto& bucket = seen[key_hash(inc.neighbor, id)];
        bool dup = false;
        for (auto other : bucket) {
          if (states_[other].vertex == inc.neighbor && same_set(other, id)) {
            dup = true;
            break;
          }
        }
        if (dup) {
          states_.pop_back();
          if (use_mask_) masks_.pop_back(); else sets_.pop_back();
          continue;
        }
        bucket.push_back(id);
        if (first[inc.neighbor] == kNone) {
          first[inc.neighbor] = id;
          if (target && *target == inc.neighbor) return first;
        }
      }
    }
    return first;
  }

  PathWitness witness(std::uint32_t state) const {
    std::vector<Vertex> verts;
    for (auto s = state; s != kNone; s = states_[s].parent) verts.push_back(states_[s].vertex);
    std::reverse(verts.begin(), verts.end());
    return make_witness(g_, c_, std::move(verts));
  }

  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

 private:
  struct State {
    Vertex vertex;
    std::uint32_t parent;
    EdgeId via;
    std::uint32_t length;
  };

  bool contains(std::uint32_t id, Color col) const {
    if (use_mask_) return (masks_[id] >> col) & 1U;
    return std::binary_search(sets_[id].begin(), sets_[id].end(), col);
  }

  void extend(std::uint32_t parent, Color col) {
    if (use_mask_) {
      masks_.push_back(masks_[parent] | (std::uint64_t{1} << col));
    } else {
      auto s = sets_[parent];
      s.insert(std::upper_bound(s.begin(), s.end(), col), col);
      sets_.push_back(std::move(s));
    }
  }

  const Graph& g_;
  const EdgeColoring& c_;
  std::size_t max_len_ = 0;
  std::vector<Color> compact_;
  bool use_mask_ = true;
  std::vector<State> states_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<Color>> sets_;
};

}  // namespace detail

/// Shortest rainbow x-y path with at most max_len edges, or nullopt if none
/// exists. Exact; throws Guard when both Q and max_len exceed kExactGuard.
inline std::optional<PathWitness> rainbow_path_exact(const Graph& g, const EdgeColoring& c, Vertex x, Vertex y,
                                                     std::size_t max_len) {
  detail::ExactRainbowBfs bfs(g, c, max_len);
  const auto first = bfs.run(x, y);
  if (first[y] == detail::ExactRainbowBfs::kNone) return std::nullopt;
  return bfs.witness(first[y]);
}

struct SearchOutcome {
  std::optional<PathWitness> witness;
  std::uint64_t expansions = 0;
  bool budget_exhausted = false;
};

/// Budgeted iterative-deepening DFS for a rainbow x-y path. Neighbor order is
/// shuffled from the seed. Branches that cannot reach y within the current
/// depth limit (by BFS distance to y) are cut, which keeps the search
/// complete for each limit. A returned witness is always valid; an empty
/// result only means "not found within budget".
inline SearchOutcome rainbow_path_search_detailed(const Graph& g, const EdgeColoring& c, Vertex x, Vertex y,
                                                  std::size_t max_len, std::uint64_t budget, std::uint64_t seed) {
  c.check(g.num_edges());
  SearchOutcome out;
  if (x == y) {
    out.witness = make_witness(g, c, {x});
    return out;
  }
  const auto to_y = bfs_distances(g, y, static_cast<std::uint32_t>(std::min<std::size_t>(max_len, kUnreached - 1)));
  if (to_y[x] == kUnreached || to_y[x] > max_len) return out;
  Rng rng(derive_seed(seed, "rainbow_search", (std::uint64_t{x} << 32) | y));
  std::vector<char> color_used(c.palette_size, 0);
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<Vertex> path{x};
  on_path[x] = 1;
  std::size_t limit = 0;
  bool stop = false;

  // Returns true when y is reached.
  auto dfs = [&](auto& self, Vertex v, std::size_t depth) -> bool {
    if (out.expansions >= budget) {
      out.budget_exhausted = true;
      stop = true;
      return false;
    }
    ++out.expansions;
    std::vector<Incidence> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    rng.shuffle(nbrs.begin(), nbrs.end());
    for (const auto& inc : nbrs) {
      const Vertex w = inc.neighbor;
      if (on_path[w] || to_y[w] == kUnreached || depth + 1 + to_y[w] > limit) continue;
      const Color col = c.colors[inc.edge];
      if (color_used[col]) continue;
      path.push_back(w);
      if (w == y) return true;
      color_used[col] = 1;
      on_path[w] = 1;
      if (self(self, w, depth + 1)) return true;
      on_path[w] = 0;
      color_used[col] = 0;
      path.pop_back();
      if (stop) return false;
    }
    return false;
  };

  for (limit = to_y[x]; limit <= max_len && !stop; ++limit) {
    if (dfs(dfs, x, 0)) {
      out.witness = make_witness(g, c, path);
      return out;
    }
  }
  return out;
}

inline std::optional<PathWitness> rainbow_path_search(const Graph& g, const EdgeColoring& c, Vertex x, Vertex y,
                                                      std::size_t max_len, std::uint64_t budget, std::uint64_t seed) {
  return rainbow_path_search_detailed(g, c, x, y, max_len, budget, seed).witness;
}

enum class VerifyMode { Exact, Search, Sampled };

inline std::string_view to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Exact: return "exact";
    case VerifyMode::Search: return "search";
    case VerifyMode::Sampled: return "sampled";
  }
  return "exact";
}

struct PairOutcome {
  Vertex x;
  Vertex y;
  std::optional<PathWitness> witness;
};

struct VerifyReport {
  std::size_t pairs_checked = 0;
  std::size_t pairs_connected = 0;
  std::size_t max_witness_length = 0;
  std::size_t total_witness_length = 0;
  VerifyMode mode = VerifyMode::Exact;
  double elapsed_ms = 0.0;
  /// Filled when witnesses are requested; one entry per checked pair.
  std::vector<PairOutcome> outcomes;

  double success_rate() const {
    return pairs_checked ? static_cast<double>(pairs_connected) / static_cast<double>(pairs_checked) : 1.0;
  }
  double mean_witness_length() const {
    return pairs_connected ? static_cast<double>(total_witness_length) / static_cast<double>(pairs_connected) : 0.0;
  }
  bool all_connected() const { return pairs_connected == pairs_checked; }

  void record(Vertex x, Vertex y, std::optional<PathWitness> w, bool keep) {
    ++pairs_checked;
    if (w) {
      ++pairs_connected;
      max_witness_length = std::max(max_witness_length, w->length());
      total_witness_length += w->length();
    }
    if (keep) outcomes.push_back({x, y, std::move(w)});
  }
};

struct VerifyOptions {
  std::size_t max_len = 0;   // 0: n - 1 in exact mode
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  bool keep_witnesses = false;
  /// Stop at the first unconnected pair (used by the brute-force scan).
  bool stop_on_failure = false;
};

/// Checks every unordered pair, exactly (state BFS per source) or by search.
inline VerifyReport verify_all_pairs(const Graph& g, const EdgeColoring& c, VerifyMode mode,
                                     const VerifyOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.mode = mode;
  const std::size_t n = g.num_vertices();
  const std::size_t max_len = opt.max_len ? opt.max_len : (n ? n - 1 : 0);
  if (mode == VerifyMode::Exact) {
    detail::ExactRainbowBfs bfs(g, c, max_len);
    for (Vertex x = 0; x + 1 < n; ++x) {
      const auto first = bfs.run(x, std::nullopt);
      for (Vertex y = x + 1; y < n; ++y) {
        std::optional<PathWitness> w;
        if (first[y] != detail::ExactRainbowBfs::kNone) w = bfs.witness(first[y]);
        const bool ok = w.has_value();
        rep.record(x, y, std::move(w), opt.keep_witnesses);
        if (!ok && opt.stop_on_failure) goto done;
      }
    }
  } else {
    for (Vertex x = 0; x + 1 < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        auto w = rainbow_path_search(g, c, x, y, max_len, opt.budget, opt.seed);
        const bool ok = w.has_value();
        rep.record(x, y, std::move(w), opt.keep_witnesses);
        if (!ok && opt.stop_on_failure) goto done;
      }
    }
  }
done:
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Draws num_pairs distinct unordered pairs of distinct vertices (all pairs
/// if fewer exist) and searches each with its own derived seed.
inline std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t num_pairs, std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (n < 2) return pairs;
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  Rng rng(derive_seed(seed, "sample_pairs"));
  if (num_pairs >= total) {
    for (Vertex x = 0; x + 1 < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    return pairs;
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  while (pairs.size() < num_pairs) {
    auto x = static_cast<Vertex>(rng.below(n));
    auto y = static_cast<Vertex>(rng.below(n - 1));
    if (y >= x) ++y;
    if (x > y) std::swap(x, y);
    if (seen.emplace(x, y).second) pairs.emplace_back(x, y);
  }
  return pairs;
}

inline VerifyReport verify_sampled(const Graph& g, const EdgeColoring& c, std::size_t num_pairs, std::uint64_t seed,
                                   std::size_t max_len, std::uint64_t budget, bool keep_witnesses = false) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.mode = VerifyMode::Sampled;
  for (auto [x, y] : sample_pairs(g.num_vertices(), num_pairs, seed)) {
    const auto pair_seed = derive_seed(seed, "pair", (std::uint64_t{x} << 32) | y);
    rep.record(x, y, rainbow_path_search(g, c, x, y, max_len, budget, pair_seed), keep_witnesses);
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Default search length bound: ceil(4 * diameter), with the double-sweep
/// lower bound standing in for the diameter above exact_limit vertices.
inline std::size_t default_search_max_len(const Graph& g, std::size_t exact_limit = 20000) {
  const auto mode = g.num_vertices() <= exact_limit ? DiameterMode::Exact : DiameterMode::DoubleSweep;
  const auto d = diameter(g, mode);
  if (!d) throw Error(ErrorCode::NotConnected, "graph is disconnected");
  return std::max<std::size_t>(1, 4 * static_cast<std::size_t>(*d));
}

inline void write_report(std::ostream& out, const VerifyReport& r, bool include_timing = false) {
  out << "mode=" << to_string(r.mode) << '\n'
      << "pairs_checked=" << r.pairs_checked << '\n'
      << "pairs_connected=" << r.pairs_connected << '\n'
      << "success_rate=" << r.success_rate() << '\n'
      << "max_witness_length=" << r.max_witness_length << '\n'
      << "mean_witness_length=" << r.mean_witness_length() << '\n';
  if (include_timing) out << "elapsed_ms=" << r.elapsed_ms << '\n';
}

inline constexpr std::string_view kReportCsvHeader =
    "mode,pairs_checked,pairs_connected,success_rate,max_witness_length,mean_witness_length";

inline void write_report_csv_row(std::ostream& out, const VerifyReport& r) {
  out << to_string(r.mode) << ',' << r.pairs_checked << ',' << r.pairs_connected << ',' << r.success_rate() << ','
      << r.max_witness_length << ',' << r.mean_witness_length() << '\n';
}

/// One line per connected pair: the witness vertex sequence.
inline void write_witnesses(std::ostream& out, const VerifyReport& r) {
  for (const auto& o : r.outcomes) {
    if (!o.witness) continue;
    for (std::size_t i = 0; i < o.witness->vertices.size(); ++i) out << (i ? " " : "") << o.witness->vertices[i];
    out << '\n';
  }
}

}  // namespace rainbow
