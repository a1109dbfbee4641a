#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hamseq/errors.hpp"

namespace hamseq {

// A degree sequence in canonical nondecreasing order. Every entry is bounded
// by the vertex count: 0 <= d_i <= n-1, and n >= 1.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw InvalidDegree("degree sequence must be nonempty");
    const int n = static_cast<int>(degrees_.size());
    for (int d : degrees_) {
      if (d < 0) throw InvalidDegree("negative degree " + std::to_string(d));
      if (d > n - 1)
        throw InvalidDegree("degree " + std::to_string(d) + " exceeds n-1 = " +
                            std::to_string(n - 1));
    }
    std::sort(degrees_.begin(), degrees_.end());
  }

  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return degrees_; }
  long long sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0LL); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(degrees_[i]);
    }
    return out;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

// Sorts a raw list into canonical order, rejecting out-of-range entries.
inline DegreeSequence normalize(std::vector<int> raw) { return DegreeSequence(std::move(raw)); }

namespace detail {

// Erdos-Gallai test on a nonincreasing sequence of m nonnegative entries.
// The inequality is checked for d_m < j <= D only, with D = max{i : d_i >= i};
// when that range is empty an even sum alone decides. Entries above m-1 are
// unrealizable outright.
inline bool graphical_nonincreasing(const int* d, int m) {
  if (m == 0) return true;
  if (d[0] > m - 1) return false;
  long long sum = 0;
  for (int i = 0; i < m; ++i) sum += d[i];
  if (sum % 2 != 0) return false;
  int strength = 0;
  for (int i = 1; i <= m; ++i)
    if (d[i - 1] >= i) strength = i;
  long long prefix = 0;
  for (int j = 1; j <= strength; ++j) {
    prefix += d[j - 1];
    if (j <= d[m - 1]) continue;
    long long rhs = static_cast<long long>(j) * (j - 1);
    for (int i = j; i < m; ++i) rhs += std::min(j, d[i]);
    if (prefix > rhs) return false;
  }
  return true;
}

}  // namespace detail

// True iff some simple graph realizes pi.
inline bool is_graphical(const DegreeSequence& pi) {
  std::vector<int> rev(pi.values().rbegin(), pi.values().rend());
  return detail::graphical_nonincreasing(rev.data(), static_cast<int>(rev.size()));
}

// D = max{i : d_i >= i} over the nonincreasing reversal of pi; 0 when the
// maximum degree is 0.
inline int eg_strength(const DegreeSequence& pi) {
  const int n = pi.size();
  int strength = 0;
  for (int i = 1; i <= n; ++i) {
    if (pi[n - i] >= i) strength = i;  // pi[n-i] is the i-th largest entry
  }
  return strength;
}

struct ChvatalResult {
  bool satisfied = true;
  std::optional<int> failing_k;  // least violating k, absent when satisfied
};

// Chvatal's condition: for every k with 1 <= k <= (n-1)/2, require
// d_k >= k+1 or d_{n-k} >= n-k (1-based, nondecreasing order).
inline ChvatalResult chvatal_condition(const DegreeSequence& pi) {
  const int n = pi.size();
  if (n < 3) throw TooSmall("chvatal_condition requires n >= 3");
  for (int k = 1; 2 * k <= n - 1; ++k) {
    if (pi[k - 1] >= k + 1) continue;
    if (pi[n - k - 1] >= n - k) continue;
    return ChvatalResult{false, k};
  }
  return ChvatalResult{true, std::nullopt};
}

// The extremal sequence d*: k terms equal to k, then n-2k terms equal to
// n-k-1, then k terms equal to n-1.
inline DegreeSequence chvatal_extremal_sequence(int n, int k) {
  if (k < 1 || 2 * k > n - 1) throw InvalidParams("require 1 <= k <= (n-1)/2");
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n));
  d.insert(d.end(), static_cast<std::size_t>(k), k);
  d.insert(d.end(), static_cast<std::size_t>(n - 2 * k), n - k - 1);
  d.insert(d.end(), static_cast<std::size_t>(k), n - 1);
  return DegreeSequence(std::move(d));
}

// Entrywise a_j >= b_j in canonical order.
inline bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw LengthMismatch("sequences differ in length");
  for (int i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// d_1 = ... = d_k = k and d_{k+1} = ... = d_{n-k+1} = n-k-1 (1-based).
inline bool matches_nw_shape(const DegreeSequence& pi, int k) {
  const int n = pi.size();
  if (n < 5 || k < 2 || 2 * k >= n) throw InvalidParams("require n >= 5 and 2 <= k < n/2");
  for (int j = 1; j <= k; ++j)
    if (pi[j - 1] != k) return false;
  for (int j = k + 1; j <= n - k + 1; ++j)
    if (pi[j - 1] != n - k - 1) return false;
  return true;
}

// Within the block shape above, the one non-forcibly-hamiltonian tail:
// d_j = n-k-1 for n-k+2 <= j <= n-1 and d_n = n-1.
inline bool is_exception_sequence(const DegreeSequence& pi, int k) {
  if (!matches_nw_shape(pi, k))
    throw ShapeMismatch("sequence lacks the k / n-k-1 block shape");
  const int n = pi.size();
  for (int j = n - k + 2; j <= n - 1; ++j)
    if (pi[j - 1] != n - k - 1) return false;
  return pi[n - 1] == n - 1;
}

}  // namespace hamseq
