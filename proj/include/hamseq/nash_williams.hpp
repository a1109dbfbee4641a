#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hamseq/degree_sequence.hpp"
#include "hamseq/errors.hpp"
#include "hamseq/rational.hpp"

namespace hamseq {

// Parameter pair for the sequence generator: n >= 5 and 2 <= k < n/2.
struct NwParams {
  int n;
  int k;

  NwParams(int n_arg, int k_arg) : n(n_arg), k(k_arg) {
    if (n < 5 || k < 2 || 2 * k >= n) throw InvalidParams("require n >= 5 and 2 <= k < n/2");
  }
};

namespace detail {

// The excluded modifier (0, ..., 0, k-1).
inline bool is_excluded_modifier(const std::vector<int>& entries) {
  const int k = static_cast<int>(entries.size()) + 1;
  if (entries.back() != k - 1) return false;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] != 0) return false;
  return true;
}

}  // namespace detail

// Nondecreasing modifier of length k-1 over {0, ..., k-1}; the single
// modifier (0, ..., 0, k-1) is excluded.
class PiPrime {
 public:
  explicit PiPrime(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidParams("modifier must have length k-1 >= 1");
    std::sort(entries_.begin(), entries_.end());
    const int bound = k() - 1;
    for (int e : entries_)
      if (e < 0 || e > bound) throw InvalidParams("modifier entries must lie in [0, k-1]");
    if (detail::is_excluded_modifier(entries_))
      throw InvalidParams("the modifier (0,...,0,k-1) is excluded");
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int k() const { return size() + 1; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return entries_; }
  long long sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }

  friend bool operator==(const PiPrime&, const PiPrime&) = default;

 private:
  std::vector<int> entries_;
};

// The two base sequences: k terms equal to k, then terms equal to n-k-1
// through position n-1; the final term is n-k-1 in the first and n-k in the
// second. Their sums differ by exactly 1, so their parities always differ.
inline std::pair<DegreeSequence, DegreeSequence> foundational_sequences(const NwParams& p) {
  std::vector<int> base;
  base.reserve(static_cast<std::size_t>(p.n));
  base.insert(base.end(), static_cast<std::size_t>(p.k), p.k);
  base.insert(base.end(), static_cast<std::size_t>(p.n - 1 - p.k), p.n - p.k - 1);
  std::vector<int> first = base;
  first.push_back(p.n - p.k - 1);
  base.push_back(p.n - p.k);
  return {DegreeSequence(std::move(first)), DegreeSequence(std::move(base))};
}

// Every admissible modifier for the given k, in lexicographic order. The
// total count is C(2k-2, k-1) - 1.
inline std::vector<PiPrime> enumerate_pi_primes(int k) {
  if (k < 2) throw InvalidParams("require k >= 2");
  std::vector<PiPrime> out;
  std::vector<int> cur(static_cast<std::size_t>(k - 1), 0);
  for (;;) {
    if (!detail::is_excluded_modifier(cur)) out.push_back(PiPrime(cur));
    int i = k - 2;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == k - 1) --i;
    if (i < 0) break;
    const int next = ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k - 1; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

// Selects the foundational sequence whose sum parity matches the modifier's,
// adds the modifier entrywise to the final k-1 positions, and re-normalizes.
// The result always has even sum.
inline DegreeSequence nw_construct(const NwParams& p, const PiPrime& pp) {
  if (pp.k() != p.k) throw InvalidParams("modifier length must be k-1");
  auto [first, second] = foundational_sequences(p);
  const DegreeSequence& base = (first.sum() % 2 == pp.sum() % 2) ? first : second;
  std::vector<int> vals = base.values();
  const int offset = p.n - (p.k - 1);
  for (int i = 0; i < p.k - 1; ++i) vals[static_cast<std::size_t>(offset + i)] += pp[i];
  return normalize(std::move(vals));
}

// Applies the construction over every admissible modifier and deduplicates.
// Returned in increasing lexicographic order.
inline std::vector<DegreeSequence> enumerate_nw_sequences(const NwParams& p) {
  std::set<DegreeSequence> seen;
  for (const PiPrime& pp : enumerate_pi_primes(p.k)) seen.insert(nw_construct(p, pp));
  return std::vector<DegreeSequence>(seen.begin(), seen.end());
}

// C(n, r) in 64 bits; throws when the value overflows.
inline std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (int i = 1; i <= r; ++i) {
    c = c * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    if (c > std::numeric_limits<std::uint64_t>::max())
      throw InvalidParams("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

// Lower bound (C(2(k-1), k-1) - 1) / 2 on the number of distinct sequences
// the construction yields for a fixed k.
inline Rational count_lower_bound(int k) {
  if (k < 2) throw InvalidParams("require k >= 2");
  return Rational(static_cast<long long>(binomial(2 * (k - 1), k - 1)) - 1, 2);
}

// Sum of the per-k bounds for k = 2 .. floor((n-1)/2).
inline Rational count_total_lower_bound(int n) {
  if (n < 5) throw InvalidParams("require n >= 5");
  Rational total(0, 1);
  for (int k = 2; 2 * k <= n - 1; ++k) total = total + count_lower_bound(k);
  return total;
}

}  // namespace hamseq
