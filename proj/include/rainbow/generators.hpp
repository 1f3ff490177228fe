#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

struct GenParams {
  std::size_t n = 0;
  /// Edge probability. When omega is set it takes precedence and
  /// p = (log n + omega) / n.
  std::optional<double> p;
  std::optional<double> omega;
  std::size_t r = 3;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1000;
};

struct GenResult {
  Graph graph;
  double p = 0.0;             // binomial mode: probability actually used
  bool p_clamped = false;     // (log n + omega)/n fell outside [0, 1]
  std::size_t attempts = 0;   // configuration model: pairings drawn
};

inline double gnp_probability(std::size_t n, double omega, bool* clamped = nullptr) {
  const double raw = (std::log(static_cast<double>(n)) + omega) / static_cast<double>(n);
  const double p = std::clamp(raw, 0.0, 1.0);
  if (clamped) *clamped = (p != raw);
  return p;
}

/// Binomial random graph G(n, p). Uses geometric skipping over the C(n,2)
/// vertex pairs, which has the same law as independent coin flips.
inline GenResult gen_gnp(const GenParams& params) {
  const std::size_t n = params.n;
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "gen_gnp requires n >= 2");
  GenResult result;
  if (params.omega) {
    result.p = gnp_probability(n, *params.omega, &result.p_clamped);
  } else if (params.p) {
    if (!(*params.p >= 0.0 && *params.p <= 1.0))
      throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
    result.p = *params.p;
  } else {
    throw Error(ErrorCode::InvalidArgument, "gen_gnp needs p or omega");
  }
  const double p = result.p;
  std::vector<Edge> edges;
  if (p >= 1.0) {
    result.graph = graphs::complete(n);
    return result;
  }
  if (p > 0.0) {
    Rng rng(derive_seed(params.seed, "gen_gnp"));
    const double log_q = std::log1p(-p);
    // Pair (w, v) with w < v; linear index runs v-major.
    std::uint64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
      const double skip = std::floor(std::log1p(-rng.uniform()) / log_q);
      const double next = static_cast<double>(w) + 1.0 + skip;
      if (next > 4.0e18) break;
      w = static_cast<std::int64_t>(next);
      while (v < n && w >= static_cast<std::int64_t>(v)) {
        w -= static_cast<std::int64_t>(v);
        ++v;
      }
      if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  }
  result.graph = Graph::from_edges(n, std::move(edges));
  return result;
}

/// One configuration-model draw: a uniform perfect matching of the r*n
/// points, projected to vertices. Empty when the projection has a loop or a
/// multiple edge.
inline std::optional<Graph> try_configuration_pairing(std::size_t n, std::size_t r, Rng& rng) {
  std::vector<Vertex> points(n * r);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / r);
  rng.shuffle(points.begin(), points.end());
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  for (std::size_t i = 0; i < points.size(); i += 2) {
    Vertex a = points[i], b = points[i + 1];
    if (a == b) return std::nullopt;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
  return Graph::from_edges(n, std::move(edges));
}

inline void check_regular_params(std::size_t n, std::size_t r) {
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "regular degree r must be >= 3");
  if ((n * r) % 2 != 0)
    throw Error(ErrorCode::Parity, "n*r = " + std::to_string(n * r) + " is odd");
  if (n <= r) throw Error(ErrorCode::InvalidArgument, "need n > r for a simple r-regular graph");
}

/// Random r-regular graph via the configuration model conditioned on
/// simplicity (rejection sampling).
inline GenResult gen_regular_config(const GenParams& params) {
  check_regular_params(params.n, params.r);
  if (params.max_attempts < 1) throw Error(ErrorCode::InvalidArgument, "max_attempts must be >= 1");
  Rng rng(derive_seed(params.seed, "gen_regular"));
  GenResult result;
  for (std::size_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
    if (auto g = try_configuration_pairing(params.n, params.r, rng)) {
      result.graph = std::move(*g);
      result.attempts = attempt;
      return result;
    }
  }
  throw Error(ErrorCode::Exhausted,
              "no simple pairing within " + std::to_string(params.max_attempts) + " attempts");
}

}  // namespace rainbow
