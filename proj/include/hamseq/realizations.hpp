#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "hamseq/degree_sequence.hpp"
#include "hamseq/graph.hpp"

namespace hamseq {

namespace detail {

inline bool next_combination(std::vector<int>& idx, int limit) {
  const int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < limit - r + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

// Residual degrees of the unsaturated vertices must stay graphical for the
// branch to be completable.
inline bool residual_graphical(const std::vector<int>& residual, std::uint64_t saturated, int n) {
  std::array<int, SimpleGraph::kMaxVertices> buf;
  int m = 0;
  for (int u = 0; u < n; ++u)
    if (!((saturated >> u) & 1ULL)) buf[static_cast<std::size_t>(m++)] = residual[static_cast<std::size_t>(u)];
  std::sort(buf.begin(), buf.begin() + m, std::greater<int>());
  return graphical_nonincreasing(buf.data(), m);
}

// Saturates one unsaturated vertex of maximum residual degree at a time,
// branching over its possible neighbor sets. Each labeled graph with the
// given degree targets is emitted exactly once; the visitor returns false to
// stop the walk.
inline bool extend_realization(SimpleGraph& g, std::vector<int>& residual, std::uint64_t saturated,
                               const std::function<bool(const SimpleGraph&)>& visit) {
  const int n = g.order();
  int v = -1;
  for (int u = 0; u < n; ++u) {
    if ((saturated >> u) & 1ULL) continue;
    if (v < 0 || residual[static_cast<std::size_t>(u)] > residual[static_cast<std::size_t>(v)]) v = u;
  }
  if (v < 0 || residual[static_cast<std::size_t>(v)] == 0) return visit(g);

  std::vector<int> cands;
  for (int u = 0; u < n; ++u)
    if (u != v && !((saturated >> u) & 1ULL) && residual[static_cast<std::size_t>(u)] > 0)
      cands.push_back(u);
  const int need = residual[static_cast<std::size_t>(v)];
  if (static_cast<int>(cands.size()) < need) return true;

  std::vector<int> idx(static_cast<std::size_t>(need));
  std::iota(idx.begin(), idx.end(), 0);
  const std::uint64_t now_saturated = saturated | (1ULL << v);
  for (;;) {
    for (int i : idx) {
      const int u = cands[static_cast<std::size_t>(i)];
      g.add_edge(v, u);
      --residual[static_cast<std::size_t>(u)];
    }
    residual[static_cast<std::size_t>(v)] = 0;
    bool keep_going = true;
    if (residual_graphical(residual, now_saturated, n))
      keep_going = extend_realization(g, residual, now_saturated, visit);
    residual[static_cast<std::size_t>(v)] = need;
    for (int i : idx) {
      const int u = cands[static_cast<std::size_t>(i)];
      g.remove_edge(v, u);
      ++residual[static_cast<std::size_t>(u)];
    }
    if (!keep_going) return false;
    if (!next_combination(idx, static_cast<int>(cands.size()))) break;
  }
  return true;
}

}  // namespace detail

// Streams every labeled graph on {0..n-1} whose sorted degree sequence equals
// pi. The search is split into slices — one per (degree assignment, neighbor
// set of the first saturated vertex) — that can run independently; their
// concatenation in slice order is the canonical stream order. Assignments are
// walked from the nonincreasing one through every distinct permutation.
class RealizationSearch {
 public:
  struct Slice {
    std::vector<int> target;          // degree of each labeled vertex
    int root = -1;                    // first saturated vertex; -1 when no edges are needed
    std::uint64_t root_neighbors = 0;
  };

  explicit RealizationSearch(const DegreeSequence& pi)
      : n_(pi.size()), target_(pi.values().rbegin(), pi.values().rend()) {
    live_ = is_graphical(pi);
    if (live_) prepare_assignment();
  }

  // Next unit of work; nullopt once the search space is exhausted.
  std::optional<Slice> next_slice() {
    if (!live_) return std::nullopt;
    Slice slice;
    slice.target = target_;
    if (target_[static_cast<std::size_t>(root_)] == 0) {
      slice.root = -1;
      advance_assignment();
      return slice;
    }
    slice.root = root_;
    for (int i : combo_) slice.root_neighbors |= 1ULL << cands_[static_cast<std::size_t>(i)];
    if (!detail::next_combination(combo_, static_cast<int>(cands_.size()))) advance_assignment();
    return slice;
  }

  // Runs one slice; returns false when the visitor stopped the walk.
  static bool run_slice(const Slice& slice, const std::function<bool(const SimpleGraph&)>& visit) {
    const int n = static_cast<int>(slice.target.size());
    SimpleGraph g(n);
    if (slice.root < 0) return visit(g);
    std::vector<int> residual = slice.target;
    const std::uint64_t saturated = 1ULL << slice.root;
    for (std::uint64_t m = slice.root_neighbors; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      g.add_edge(slice.root, u);
      --residual[static_cast<std::size_t>(u)];
    }
    residual[static_cast<std::size_t>(slice.root)] = 0;
    if (!detail::residual_graphical(residual, saturated, n)) return true;
    return detail::extend_realization(g, residual, saturated, visit);
  }

 private:
  void prepare_assignment() {
    while (live_) {
      root_ = 0;
      for (int u = 1; u < n_; ++u)
        if (target_[static_cast<std::size_t>(u)] > target_[static_cast<std::size_t>(root_)]) root_ = u;
      const int need = target_[static_cast<std::size_t>(root_)];
      if (need == 0) return;
      cands_.clear();
      for (int u = 0; u < n_; ++u)
        if (u != root_ && target_[static_cast<std::size_t>(u)] > 0) cands_.push_back(u);
      if (static_cast<int>(cands_.size()) >= need) {
        combo_.assign(static_cast<std::size_t>(need), 0);
        std::iota(combo_.begin(), combo_.end(), 0);
        return;
      }
      live_ = std::prev_permutation(target_.begin(), target_.end());
    }
  }

  void advance_assignment() {
    live_ = std::prev_permutation(target_.begin(), target_.end());
    prepare_assignment();
  }

  int n_;
  std::vector<int> target_;
  bool live_ = false;
  int root_ = -1;
  std::vector<int> cands_;
  std::vector<int> combo_;
};

// Walks the full stream in canonical order; returns false when the visitor
// stopped early. A non-graphical sequence yields an empty stream.
inline bool for_each_realization(const DegreeSequence& pi,
                                 const std::function<bool(const SimpleGraph&)>& visit) {
  RealizationSearch search(pi);
  while (auto slice = search.next_slice())
    if (!RealizationSearch::run_slice(*slice, visit)) return false;
  return true;
}

// Materializes the stream; intended for small n.
inline std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& pi) {
  std::vector<SimpleGraph> out;
  for_each_realization(pi, [&out](const SimpleGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace hamseq
