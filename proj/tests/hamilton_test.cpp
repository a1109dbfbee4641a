#include "hamseq/hamilton.hpp"

#include <random>

#include "gtest/gtest.h"
#include "hamseq/graph.hpp"
#include "test_util.hpp"

namespace hamseq {
namespace {

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Two triangles sharing vertex 0.
SimpleGraph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

TEST(ClosureTest, FixedPointsAndForcedJoins) {
  const SimpleGraph c5 = cycle_graph(5);
  EXPECT_EQ(closure(c5), c5);  // all nonadjacent degree sums are 4 < 5

  SimpleGraph k4_minus = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const SimpleGraph closed = closure(k4_minus);
  EXPECT_TRUE(is_complete(closed));

  EXPECT_EQ(closure(bowtie()), bowtie());
}

TEST(ClosureTest, IdempotentOrderFreeAndHamiltonicityPreserving) {
  std::mt19937 rng(7);
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < testutil::graph_mask_count(n); ++mask) {
      const SimpleGraph g = testutil::graph_from_mask(n, mask);
      const SimpleGraph cl = closure(g);
      EXPECT_EQ(closure(cl), cl);
      EXPECT_EQ(is_hamiltonian(g), is_hamiltonian(cl));
      for (int trial = 0; trial < 3; ++trial) EXPECT_EQ(testutil::random_order_closure(g, rng), cl);
    }
  }
}

TEST(IsHamiltonianTest, KnownGraphs) {
  EXPECT_TRUE(is_hamiltonian(cycle_graph(5)));
  EXPECT_TRUE(is_hamiltonian(cycle_graph(3)));
  EXPECT_FALSE(is_hamiltonian(build_cnk(7, 2)));
  EXPECT_FALSE(is_hamiltonian(build_exception_graph(7, 2, 1)));
  EXPECT_FALSE(is_hamiltonian(SimpleGraph(1)));
  EXPECT_FALSE(is_hamiltonian(build_graph(2, {{0, 1}})));
  EXPECT_FALSE(is_hamiltonian(path_graph(4)));
}

TEST(IsHamiltonianTest, AgreesWithPermutationOracle) {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < testutil::graph_mask_count(n); ++mask) {
      const SimpleGraph g = testutil::graph_from_mask(n, mask);
      EXPECT_EQ(is_hamiltonian(g), testutil::hamiltonian_by_permutations(g));
    }
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const SimpleGraph g = testutil::random_graph(7, 0.5, rng);
    EXPECT_EQ(is_hamiltonian(g), testutil::hamiltonian_by_permutations(g));
  }
}

TEST(CircumferenceTest, KnownGraphs) {
  EXPECT_EQ(circumference(cycle_graph(5)), 5);
  EXPECT_EQ(circumference(path_graph(4)), 0);
  // complete bipartite graph with parts {0,1} and {2,3,4}
  const SimpleGraph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(circumference(k23), 4);
  EXPECT_EQ(circumference(k23), testutil::circumference_by_enumeration(k23));
  EXPECT_EQ(circumference(bowtie()), 3);
  EXPECT_EQ(circumference(SimpleGraph(1)), 0);
}

TEST(CircumferenceTest, AgreesWithEnumerationOracle) {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < testutil::graph_mask_count(n); ++mask) {
      const SimpleGraph g = testutil::graph_from_mask(n, mask);
      EXPECT_EQ(circumference(g), testutil::circumference_by_enumeration(g));
    }
}

TEST(CircumferenceTest, EqualsOrderIffHamiltonian) {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < testutil::graph_mask_count(n); ++mask) {
      const SimpleGraph g = testutil::graph_from_mask(n, mask);
      EXPECT_EQ(circumference(g) == n, is_hamiltonian(g));
    }
}

TEST(IsBiconnectedTest, KnownGraphs) {
  EXPECT_TRUE(is_biconnected(cycle_graph(5)));
  EXPECT_FALSE(is_biconnected(path_graph(3)));
  EXPECT_FALSE(is_biconnected(bowtie()));
  EXPECT_FALSE(is_biconnected(build_graph(2, {{0, 1}})));
  EXPECT_FALSE(is_biconnected(build_graph(4, {{0, 1}, {2, 3}})));
}

// Oracle: 2-connected iff connected with n >= 3 and removing any one vertex
// leaves the rest connected.
bool biconnected_by_deletion(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  for (int removed = 0; removed < n; ++removed) {
    const std::uint64_t allowed = detail::low_bits(n) & ~(1ULL << removed);
    const int start = removed == 0 ? 1 : 0;
    if (detail::reachable_mask(g, start, allowed) != allowed) return false;
  }
  return true;
}

TEST(IsBiconnectedTest, AgreesWithDeletionOracle) {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < testutil::graph_mask_count(n); ++mask) {
      const SimpleGraph g = testutil::graph_from_mask(n, mask);
      EXPECT_EQ(is_biconnected(g), biconnected_by_deletion(g));
    }
}

}  // namespace
}  // namespace hamseq
