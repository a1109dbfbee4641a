#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamseq/degree_sequence.hpp"
#include "hamseq/errors.hpp"

namespace hamseq {

namespace detail {

inline constexpr std::uint64_t low_bits(int count) {
  return count >= 64 ? ~0ULL : (1ULL << count) - 1;
}

}  // namespace detail

// Labeled simple undirected graph on vertices 0..n-1. Adjacency is one
// 64-bit row per vertex, so at most 64 vertices.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit SimpleGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InvalidParams("vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1ULL;
  }

  void add_edge(int u, int v) {
    check_endpoints(u, v);
    adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
    adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
  }

  void remove_edge(int u, int v) {
    check_endpoints(u, v);
    adj_[static_cast<std::size_t>(u)] &= ~(1ULL << v);
    adj_[static_cast<std::size_t>(v)] &= ~(1ULL << u);
  }

  std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // Edges as ordered pairs u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      std::uint64_t above = adj_[static_cast<std::size_t>(u)] & ~detail::low_bits(u + 1);
      while (above != 0) {
        const int v = std::countr_zero(above);
        above &= above - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_endpoints(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InvalidEdge("endpoint out of range [0, " + std::to_string(n_) + ")");
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

inline SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline DegreeSequence degree_sequence(const SimpleGraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(d));
}

inline int min_degree(const SimpleGraph& g) {
  int best = g.order() > 0 ? g.degree(0) : 0;
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace detail {

inline void add_clique(SimpleGraph& g, int lo, int hi) {
  for (int u = lo; u < hi; ++u)
    for (int v = u + 1; v < hi; ++v) g.add_edge(u, v);
}

}  // namespace detail

// The graph C_{n,k}: a k-clique joined to the disjoint union of k isolated
// vertices and an (n-2k)-clique. Layout: vertices 0..k-1 independent,
// k..n-k-1 the middle clique, n-k..n-1 the joined clique.
inline SimpleGraph build_cnk(int n, int k) {
  if (k < 1 || 2 * k > n - 1) throw InvalidParams("require 1 <= k <= (n-1)/2");
  SimpleGraph g(n);
  detail::add_clique(g, k, n - k);
  detail::add_clique(g, n - k, n);
  for (int h = n - k; h < n; ++h)
    for (int v = 0; v < n - k; ++v) g.add_edge(h, v);
  return g;
}

// Nonhamiltonian witnesses behind the exception tail: j = 1 yields the
// cut-vertex graph K_1 v (K_k u K_{n-k-1}); j = k yields C_{n,k}.
inline SimpleGraph build_exception_graph(int n, int k, int j) {
  if (n < 5 || k < 2 || 2 * k >= n) throw InvalidParams("require n >= 5 and 2 <= k < n/2");
  if (j == k) return build_cnk(n, k);
  if (j != 1) throw InvalidParams("j must be 1 or k");
  SimpleGraph g(n);
  detail::add_clique(g, 0, k);
  detail::add_clique(g, k, n - 1);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(n - 1, v);
  return g;
}

// Havel-Hakimi construction: a realization of pi when one exists.
// Independent of the Erdos-Gallai test.
inline std::optional<SimpleGraph> havel_hakimi_realize(const DegreeSequence& pi) {
  const int n = pi.size();
  SimpleGraph g(n);
  std::vector<std::pair<int, int>> pool;  // (residual degree, label)
  pool.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) pool.emplace_back(pi[v], v);
  const auto by_residual_desc = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  };
  std::sort(pool.begin(), pool.end(), by_residual_desc);
  while (!pool.empty()) {
    const auto [need, v] = pool.front();
    if (need == 0) break;
    pool.erase(pool.begin());
    if (need > static_cast<int>(pool.size())) return std::nullopt;
    for (int i = 0; i < need; ++i) {
      if (pool[static_cast<std::size_t>(i)].first == 0) return std::nullopt;
      g.add_edge(v, pool[static_cast<std::size_t>(i)].second);
      --pool[static_cast<std::size_t>(i)].first;
    }
    std::sort(pool.begin(), pool.end(), by_residual_desc);
  }
  return g;
}

// Edge-list text format: a line "n <count>", then one "u v" per line.
inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline SimpleGraph parse_edge_list(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "n" || !(in >> n))
    throw ParseError("edge list must start with a line 'n <count>'");
  if (n < 0 || n > SimpleGraph::kMaxVertices) throw ParseError("vertex count out of range");
  SimpleGraph g(n);
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("dangling endpoint in edge list");
    g.add_edge(u, v);
  }
  if (in.fail() && !in.eof()) throw ParseError("malformed edge list");
  return g;
}

inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace hamseq
