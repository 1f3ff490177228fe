#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable simple undirected graph in canonical form: every edge stored as
/// (min, max), the edge list sorted lexicographically with ids equal to the
/// sorted position, and each adjacency list sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph. Throws InvalidArgument on loops, duplicate
  /// edges, or endpoints out of range.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::InvalidArgument,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                        std::to_string(n));
      }
      if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i] == edges[i - 1]) {
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate edge (" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + ")");
      }
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.incidence_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted, so for each vertex the smaller neighbors (where it is
    // the max endpoint) arrive in increasing order, as do the larger ones.
    // Two passes keep every adjacency list sorted by neighbor id.
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
      const auto& e = g.edges_[id];
      g.incidence_[fill[e.v]++] = {e.u, id};
    }
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
      const auto& e = g.edges_[id];
      g.incidence_[fill[e.u]++] = {e.v, id};
    }
    return g;
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edge id joining u and v, or kNoEdge.
  EdgeId edge_between(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Incidence& inc, Vertex w) { return inc.neighbor < w; });
    return (it != adj.end() && it->neighbor == v) ? it->edge : kNoEdge;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
};

// Edge-list text format: "n m", then m lines "u v" with u < v in canonical
// order. Line i+1 defines edge id i. Blank lines and '#' comments are skipped
// on read and never written.

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace detail {

/// Next non-blank, non-comment line; false at end of input.
inline bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(in, line, line_no)) throw Error(ErrorCode::Parse, "missing header line");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, line_no)) {
      throw Error(ErrorCode::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || u < 0 || v < 0 || (row >> extra)) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    // Line order defines edge ids, so only the canonical form is accepted.
    if (u >= v || (!edges.empty() && !(edges.back() < e))) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": edges must satisfy u < v in sorted order");
    }
    edges.push_back(e);
  }
  if (detail::next_data_line(in, line, line_no)) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": trailing data after " +
                                      std::to_string(m) + " edges");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  write_graph(out, g);
}

namespace graphs {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({Vertex(i), Vertex(i + 1)});
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({Vertex(i), Vertex((i + 1) % n)});
  return Graph::from_edges(n, std::move(e));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({Vertex(i), Vertex(j)});
  return Graph::from_edges(n, std::move(e));
}

/// K_{1,leaves} with center 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, Vertex(i)});
  return Graph::from_edges(leaves + 1, std::move(e));
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, Vertex((i + 1) % 5)});
    e.push_back({i, Vertex(i + 5)});
    e.push_back({Vertex(i + 5), Vertex((i + 2) % 5 + 5)});
  }
  return Graph::from_edges(10, std::move(e));
}

/// Complete arity-ary tree of the given depth, vertices numbered in BFS order.
inline Graph complete_tree(std::size_t arity, std::size_t depth) {
  std::vector<Edge> e;
  std::size_t n = 1, level = 1, first = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t next_first = n;
    for (std::size_t i = 0; i < level; ++i)
      for (std::size_t c = 0; c < arity; ++c) e.push_back({Vertex(first + i), Vertex(n++)});
    first = next_first;
    level *= arity;
  }
  return Graph::from_edges(n, std::move(e));
}

/// Disjoint union; vertices of b are shifted by a.num_vertices().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (const auto& f : b.edges()) e.push_back({f.u + shift, f.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), std::move(e));
}

}  // namespace graphs

}  // namespace rainbow
