#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hamseq/hamseq.hpp"

namespace testutil {

using hamseq::SimpleGraph;

// Graph from an edge-subset bitmask over the pairs (0,1),(0,2),...,(n-2,n-1)
// in lexicographic order.
inline SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1ULL) g.add_edge(u, v);
  return g;
}

inline std::uint64_t graph_mask_count(int n) { return 1ULL << (n * (n - 1) / 2); }

// Spanning-cycle oracle by trying every vertex order. Independent of the
// library's backtracking search.
inline bool hamiltonian_by_permutations(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
      ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Longest-cycle oracle: every vertex subset, every cyclic order. Small n only.
inline int circumference_by_enumeration(const SimpleGraph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub) {
    const int size = std::popcount(sub);
    if (size < 3 || size <= best) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if ((sub >> v) & 1ULL) members.push_back(v);
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      bool ok = g.has_edge(members[0], rest.front()) && g.has_edge(rest.back(), members[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok) {
        best = size;
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return best;
}

// All nondecreasing integer vectors of length n over [0, n-1].
inline std::vector<std::vector<int>> all_degree_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    const int next = ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  if (hamseq::degree_sequence(a) != hamseq::degree_sequence(b)) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

// Closure variant that joins eligible pairs in random order.
inline SimpleGraph random_order_closure(SimpleGraph g, std::mt19937& rng) {
  const int n = g.order();
  for (;;) {
    std::vector<std::pair<int, int>> eligible;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n) eligible.emplace_back(u, v);
    if (eligible.empty()) return g;
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    const auto [u, v] = eligible[pick(rng)];
    g.add_edge(u, v);
  }
}

}  // namespace testutil
