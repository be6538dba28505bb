#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace anticoord {

// Maximum matching on a bipartite graph given as adjacency from left vertices
// [0, left) to right vertices [0, right). Hopcroft-Karp; neighbors are tried in
// the order given, so the result is deterministic.
struct Matching {
  std::vector<std::size_t> left_mate;   // npos when unmatched
  std::vector<std::size_t> right_mate;
  std::size_t size = 0;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

inline Matching hopcroft_karp(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t npos = Matching::npos;
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  Matching m{std::vector<std::size_t>(left, npos), std::vector<std::size_t>(right, npos), 0};
  std::vector<std::size_t> dist(left);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < left; ++u) {
      dist[u] = m.left_mate[u] == npos ? 0 : inf;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        std::size_t w = m.right_mate[v];
        if (w == npos)
          found = true;
        else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> cursor(left);
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t& k = cursor[u]; k < adj[u].size(); ++k) {
      std::size_t v = adj[u][k];
      std::size_t w = m.right_mate[v];
      if (w == npos || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.left_mate[u] = v;
        m.right_mate[v] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t u = 0; u < left; ++u)
      if (m.left_mate[u] == npos && dfs(dfs, u)) ++m.size;
  }
  return m;
}

// Koenig: from unmatched left vertices, alternate along non-matching then matching
// edges. Cover = unvisited left plus visited right.
inline void koenig_cover(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adj,
                         const Matching& m, std::vector<std::size_t>& cover_left, std::vector<std::size_t>& cover_right) {
  std::vector<char> seen_left(left, 0), seen_right(right, 0);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < left; ++u)
    if (m.left_mate[u] == Matching::npos) {
      seen_left[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (seen_right[v] || m.left_mate[u] == v) continue;
      seen_right[v] = 1;
      std::size_t w = m.right_mate[v];
      if (w != Matching::npos && !seen_left[w]) {
        seen_left[w] = 1;
        q.push(w);
      }
    }
  }
  cover_left.clear();
  cover_right.clear();
  for (std::size_t u = 0; u < left; ++u)
    if (!seen_left[u]) cover_left.push_back(u);
  for (std::size_t v = 0; v < right; ++v)
    if (seen_right[v]) cover_right.push_back(v);
}

}  // namespace anticoord
