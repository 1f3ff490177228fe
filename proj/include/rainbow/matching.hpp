#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace rainbow {

/// Square boolean biadjacency matrix: rows are the left side, columns the right.
using BipartiteMatrix = std::vector<std::vector<bool>>;

/// Maximum matching by augmenting paths (Kuhn). Rows are tried in order and
/// each row scans columns in increasing order, so the result is deterministic.
/// Pairs are (row, col), sorted by row.
inline std::vector<std::pair<std::size_t, std::size_t>> bipartite_matching(const BipartiteMatrix& adj) {
  const std::size_t rows = adj.size();
  const std::size_t cols = rows ? adj[0].size() : 0;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_col(cols, kFree);
  std::vector<char> visited;
  auto augment = [&](auto& self, std::size_t row) -> bool {
    for (std::size_t col = 0; col < cols; ++col) {
      if (!adj[row][col] || visited[col]) continue;
      visited[col] = 1;
      if (match_col[col] == kFree || self(self, match_col[col])) {
        match_col[col] = row;
        return true;
      }
    }
    return false;
  };
  for (std::size_t row = 0; row < rows; ++row) {
    visited.assign(cols, 0);
    augment(augment, row);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t col = 0; col < cols; ++col)
    if (match_col[col] != kFree) out.emplace_back(match_col[col], col);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of non-empty row subsets S with |N(S)| < min_neighbors(|S|, d).
template <class Bound>
std::size_t neighborhood_bound_violations(const BipartiteMatrix& adj, Bound&& min_neighbors) {
  const std::size_t d = adj.size();
  std::size_t violations = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    std::vector<bool> nb(d, false);
    long long s = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!((mask >> i) & 1U)) continue;
      ++s;
      for (std::size_t j = 0; j < d; ++j)
        if (adj[i][j]) nb[j] = true;
    }
    const long long n_s = std::count(nb.begin(), nb.end(), true);
    if (n_s < min_neighbors(s, static_cast<long long>(d))) ++violations;
  }
  return violations;
}

inline long long ceil_div(long long num, long long den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

/// Subsets violating |N(S)| - |S| >= ceil((d - 2 - |S|)|S| / (|S| + 1)), the
/// expansion bound that forces a matching of size d - 1.
inline std::size_t hall_bound_violations(const BipartiteMatrix& adj) {
  return neighborhood_bound_violations(
      adj, [](long long s, long long d) { return s + ceil_div((d - 2 - s) * s, s + 1); });
}

/// Subsets violating |N(S)| >= ceil(|S| / 3), the bound used two levels at a
/// time on binary trees.
inline std::size_t third_bound_violations(const BipartiteMatrix& adj) {
  return neighborhood_bound_violations(adj, [](long long s, long long) { return ceil_div(s, 3); });
}

}  // namespace rainbow
