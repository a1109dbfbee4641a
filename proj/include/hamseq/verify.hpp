#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "hamseq/degree_sequence.hpp"
#include "hamseq/graph.hpp"
#include "hamseq/hamilton.hpp"
#include "hamseq/nash_williams.hpp"
#include "hamseq/realizations.hpp"

namespace hamseq {

enum class Verdict {
  kForciblyHamiltonian,
  kNotForciblyHamiltonian,
  kNotGraphical,
  kInconclusive,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kForciblyHamiltonian: return "FORCIBLY_HAMILTONIAN";
    case Verdict::kNotForciblyHamiltonian: return "NOT_FORCIBLY_HAMILTONIAN";
    case Verdict::kNotGraphical: return "NOT_GRAPHICAL";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

struct VerificationReport {
  DegreeSequence sequence;
  bool graphical = false;
  ChvatalResult chvatal;
  std::optional<int> nw_shape_k;  // k for which the block shape holds
  bool exception = false;         // the non-forcibly-hamiltonian tail
  Verdict verdict = Verdict::kInconclusive;
  std::optional<SimpleGraph> counterexample;  // nonhamiltonian realization
  std::uint64_t realizations_checked = 0;
  std::uint64_t closure_accepts = 0;
};

struct VerifyOptions {
  // Cap on checked realizations. Unset: unlimited for n <= 9, 10^7 beyond.
  std::optional<std::uint64_t> budget;
  int jobs = 1;
  bool use_closure = true;
};

inline constexpr std::uint64_t kDefaultBudgetLargeN = 10'000'000;

// Theory-only classification. Fills graphicality, the Chvatal result and the
// block-shape/exception flags without enumerating realizations. Never returns
// NOT_FORCIBLY_HAMILTONIAN: refutation always requires a witness graph.
inline VerificationReport classify(const DegreeSequence& pi) {
  const int n = pi.size();
  if (n < 3) throw TooSmall("classification requires n >= 3");
  VerificationReport report{pi};
  report.graphical = is_graphical(pi);
  report.chvatal = chvatal_condition(pi);
  if (n >= 5) {
    for (int k = 2; 2 * k < n; ++k) {
      if (matches_nw_shape(pi, k)) {
        report.nw_shape_k = k;
        report.exception = is_exception_sequence(pi, k);
        break;
      }
    }
  }
  if (!report.graphical)
    report.verdict = Verdict::kNotGraphical;
  else if (report.chvatal.satisfied || (report.nw_shape_k.has_value() && !report.exception))
    report.verdict = Verdict::kForciblyHamiltonian;
  else
    report.verdict = Verdict::kInconclusive;
  return report;
}

namespace detail {

struct VerifyState {
  explicit VerifyState(const DegreeSequence& pi) : search(pi) {}

  RealizationSearch search;
  std::mutex slice_mu;
  std::uint64_t next_slice_index = 0;

  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  bool use_closure = true;

  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> closure_accepts{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_exhausted{false};

  std::mutex witness_mu;
  std::optional<SimpleGraph> witness;
  std::uint64_t witness_slice = std::numeric_limits<std::uint64_t>::max();
};

// Workers share only the slice generator, the stop flag and the counters;
// each realization is checked via the closure fast path (complete closure
// accepts immediately) unless that path is disabled.
inline void verify_worker(VerifyState& st) {
  for (;;) {
    if (st.stop.load(std::memory_order_relaxed)) return;
    std::optional<RealizationSearch::Slice> slice;
    std::uint64_t index = 0;
    {
      std::scoped_lock lock(st.slice_mu);
      slice = st.search.next_slice();
      index = st.next_slice_index++;
    }
    if (!slice.has_value()) return;
    RealizationSearch::run_slice(*slice, [&st, index](const SimpleGraph& g) {
      if (st.stop.load(std::memory_order_relaxed)) return false;
      const std::uint64_t seen = st.checked.fetch_add(1) + 1;
      if (seen > st.budget) {
        st.checked.fetch_sub(1);
        st.budget_exhausted.store(true);
        st.stop.store(true);
        return false;
      }
      bool hamiltonian = false;
      if (st.use_closure) {
        const SimpleGraph cl = closure(g);
        if (is_complete(cl)) {
          st.closure_accepts.fetch_add(1);
          hamiltonian = true;  // complete graph on n >= 3 vertices
        } else {
          hamiltonian = is_hamiltonian(cl);
        }
      } else {
        hamiltonian = is_hamiltonian(g);
      }
      if (hamiltonian) return true;
      {
        std::scoped_lock lock(st.witness_mu);
        if (index < st.witness_slice) {
          st.witness = g;
          st.witness_slice = index;
        }
      }
      st.stop.store(true);
      return false;
    });
  }
}

}  // namespace detail

// Exhaustive forcible-hamiltonicity verdict: every realization of pi is
// walked until one is nonhamiltonian (refuted with that witness), the stream
// is exhausted (confirmed), or the budget runs out (INCONCLUSIVE). With one
// job the witness is the first counterexample in stream order.
inline VerificationReport verify_forcibly_hamiltonian(const DegreeSequence& pi,
                                                      const VerifyOptions& opts = {}) {
  const int n = pi.size();
  if (n < 3) throw TooSmall("verification requires n >= 3");
  VerificationReport report = classify(pi);
  if (!report.graphical) return report;

  detail::VerifyState st(pi);
  st.use_closure = opts.use_closure;
  if (opts.budget.has_value())
    st.budget = *opts.budget;
  else if (n >= 10)
    st.budget = kDefaultBudgetLargeN;

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    detail::verify_worker(st);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back([&st] { detail::verify_worker(st); });
    for (auto& t : pool) t.join();
  }

  report.realizations_checked = st.checked.load();
  report.closure_accepts = st.closure_accepts.load();
  if (st.witness.has_value()) {
    report.verdict = Verdict::kNotForciblyHamiltonian;
    report.counterexample = std::move(st.witness);
  } else if (st.budget_exhausted.load()) {
    report.verdict = Verdict::kInconclusive;
  } else {
    report.verdict = Verdict::kForciblyHamiltonian;
  }
  return report;
}

// Verifies every sequence the (n, k) construction yields.
inline std::vector<VerificationReport> check_nw_family(const NwParams& p,
                                                        const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> reports;
  for (const DegreeSequence& pi : enumerate_nw_sequences(p))
    reports.push_back(verify_forcibly_hamiltonian(pi, opts));
  return reports;
}

// Circumference bound for 2-connected graphs: cir(G) >= min(n, 2*delta).
// Vacuously true when G is not 2-connected.
inline bool dirac_property_check(const SimpleGraph& g) {
  if (!is_biconnected(g)) return true;
  return circumference(g) >= std::min(g.order(), 2 * min_degree(g));
}

}  // namespace hamseq
