#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hamseq/graph.hpp"

namespace hamseq {

namespace detail {

// Vertices reachable from start along edges inside `allowed`; start is
// always included.
inline std::uint64_t reachable_mask(const SimpleGraph& g, int start, std::uint64_t allowed) {
  std::uint64_t reach = 1ULL << start;
  std::uint64_t frontier = reach;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = g.neighbor_mask(v) & allowed & ~reach;
    reach |= fresh;
    frontier |= fresh;
  }
  return reach;
}

}  // namespace detail

inline bool is_connected(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const std::uint64_t all = detail::low_bits(n);
  return detail::reachable_mask(g, 0, all) == all;
}

inline bool is_complete(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

// Bondy-Chvatal closure: repeatedly joins a nonadjacent pair with degree sum
// >= n until none remains. Pairs are joined in lexicographic order with a
// rescan after every join; the final graph does not depend on that order.
inline SimpleGraph closure(const SimpleGraph& g) {
  SimpleGraph h = g;
  const int n = h.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = h.degree(v);
  bool joined = true;
  while (joined) {
    joined = false;
    for (int u = 0; u < n && !joined; ++u) {
      for (int v = u + 1; v < n && !joined; ++v) {
        if (!h.has_edge(u, v) &&
            deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)] >= n) {
          h.add_edge(u, v);
          ++deg[static_cast<std::size_t>(u)];
          ++deg[static_cast<std::size_t>(v)];
          joined = true;
        }
      }
    }
  }
  return h;
}

namespace detail {

struct HamiltonSearch {
  const SimpleGraph& g;
  int n;
  std::uint64_t all;

  // Extends the path 0..cur; `visited` holds the vertices already on it.
  bool extend(int cur, int count, std::uint64_t visited) const {
    if (count == n) return (g.neighbor_mask(cur) & 1ULL) != 0;
    const std::uint64_t rest = all & ~visited;
    const std::uint64_t region = rest | (1ULL << cur) | 1ULL;
    if (reachable_mask(g, cur, region) != region) return false;
    for (std::uint64_t m = rest; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (std::popcount(g.neighbor_mask(u) & region) < 2) return false;
    }
    for (std::uint64_t m = g.neighbor_mask(cur) & rest; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (extend(w, count + 1, visited | (1ULL << w))) return true;
    }
    return false;
  }
};

}  // namespace detail

// Exact spanning-cycle test by backtracking from vertex 0, pruning on
// connectivity of the remainder and on remaining vertices left with fewer
// than two usable neighbors. Graphs on fewer than 3 vertices are never
// hamiltonian.
inline bool is_hamiltonian(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;
  if (!is_connected(g)) return false;
  const detail::HamiltonSearch search{g, n, detail::low_bits(n)};
  return search.extend(0, 1, 1ULL);
}

namespace detail {

struct CircumferenceSearch {
  const SimpleGraph& g;
  int n;
  int base = 0;              // smallest vertex on the cycle
  std::uint64_t allowed = 0;  // vertices >= base
  int best = 0;

  void extend(int cur, int len, std::uint64_t visited) {
    if (len >= 3 && ((g.neighbor_mask(cur) >> base) & 1ULL)) best = std::max(best, len);
    if (best == n) return;
    const std::uint64_t rest = allowed & ~visited;
    if (rest == 0) return;
    const std::uint64_t reach = reachable_mask(g, cur, rest | (1ULL << cur));
    if (len + std::popcount(reach & rest) <= best) return;
    if ((g.neighbor_mask(base) & reach) == 0) return;  // no way to close
    for (std::uint64_t m = g.neighbor_mask(cur) & rest; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      extend(w, len + 1, visited | (1ULL << w));
      if (best == n) return;
    }
  }
};

}  // namespace detail

// Length of a longest cycle; 0 when the graph is acyclic.
inline int circumference(const SimpleGraph& g) {
  const int n = g.order();
  detail::CircumferenceSearch search{g, n};
  for (int base = 0; base < n && search.best < n; ++base) {
    search.base = base;
    search.allowed = detail::low_bits(n) & ~detail::low_bits(base);
    search.extend(base, 1, 1ULL << base);
  }
  return search.best;
}

namespace detail {

struct ArticulationScan {
  const SimpleGraph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int timer = 0;
  bool found = false;

  void dfs(int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (std::uint64_t m = g.neighbor_mask(u); m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (disc[static_cast<std::size_t>(v)] < 0) {
        ++children;
        dfs(v, u);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (parent >= 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)])
          found = true;
      } else if (v != parent) {
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
    if (parent < 0 && children > 1) found = true;
  }
};

}  // namespace detail

// 2-connected: connected, n >= 3, and no cut-vertex.
inline bool is_biconnected(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  detail::ArticulationScan scan{g, std::vector<int>(static_cast<std::size_t>(n), -1),
                                std::vector<int>(static_cast<std::size_t>(n), -1)};
  scan.dfs(0, -1);
  return !scan.found;
}

}  // namespace hamseq
