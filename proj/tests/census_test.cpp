#include "cospec/census.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "cospec/graph.hpp"
#include "test_util.hpp"

namespace cospec {
namespace {

using testing::subset_hamiltonicity_census;

TEST(CountCyclesTest, CycleGraphContainsExactlyItself) {
  CycleCensus census = count_cycles(cycle_graph(6), 12);
  EXPECT_EQ(census.counts, (std::map<int, long long>{{6, 1}}));
  EXPECT_EQ(census.total, 1);
}

TEST(CountCyclesTest, CompleteBipartite33) {
  CycleCensus census = count_cycles(complete_bipartite(3, 3), 6);
  EXPECT_EQ(census.count_at(4), 9);
  EXPECT_EQ(census.count_at(6), 6);
  EXPECT_EQ(census.total, 15);
}

TEST(CountCyclesTest, ForestIsEmpty) {
  CycleCensus census = count_cycles(path_graph(8), 8);
  EXPECT_TRUE(census.counts.empty());
  EXPECT_EQ(census.total, 0);
}

TEST(CountCyclesTest, RejectsTinyCap) {
  EXPECT_THROW(count_cycles(cycle_graph(4), 2), std::invalid_argument);
}

TEST(CountCyclesTest, CapIsRespected) {
  Graph g = disjoint_union(cycle_graph(4), cycle_graph(10));
  CycleCensus census = count_cycles(g, 8);
  EXPECT_EQ(census.counts, (std::map<int, long long>{{4, 1}}));
}

TEST(CountCyclesTest, AgreesWithSubsetOracle) {
  std::vector<Graph> corpus{complete_bipartite(3, 3), complete_bipartite(3, 4),
                            complete_bipartite(2, 5), cycle_graph(9),
                            disjoint_union(cycle_graph(4), cycle_graph(5))};
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial)
    corpus.push_back(testing::random_graph(8 + static_cast<int>(rng() % 4), 0.35, rng));
  for (const Graph& g : corpus) {
    int cap = g.node_count();
    CycleCensus census = count_cycles(g, cap);
    EXPECT_EQ(census.counts, subset_hamiltonicity_census(g, cap));
  }
}

TEST(CountCyclesTest, InvariantUnderRelabeling) {
  std::mt19937 rng(77);
  Graph g = testing::random_graph(11, 0.35, rng);
  CycleCensus base = count_cycles(g, 11);
  std::vector<int> perm(11);
  for (int i = 0; i < 11; ++i) perm[static_cast<size_t>(i)] = i;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CycleCensus permuted = count_cycles(testing::permuted(g, perm), 11);
    EXPECT_EQ(permuted.counts, base.counts);
  }
}

TEST(CountCyclesTest, UnionIsPointwiseSum) {
  Graph g1 = complete_bipartite(3, 3);
  Graph g2 = cycle_graph(5);
  CycleCensus c1 = count_cycles(g1, 12);
  CycleCensus c2 = count_cycles(g2, 12);
  CycleCensus both = count_cycles(disjoint_union(g1, g2), 12);
  std::map<int, long long> expected = c1.counts;
  for (auto [len, count] : c2.counts) expected[len] += count;
  EXPECT_EQ(both.counts, expected);
}

TEST(CountCyclesTest, BipartiteGraphsHaveNoOddCycles) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_bipartite(5, 6, 0.5, rng);
    CycleCensus census = count_cycles(g, g.node_count());
    for (const auto& [len, count] : census.counts) EXPECT_EQ(len % 2, 0);
  }
}

TEST(CountCyclesTest, DeterministicAcrossWorkerCounts) {
  Graph g = complete_bipartite(4, 4);
  CycleCensus one = count_cycles(g, CensusOptions{8, 1, 0});
  for (int threads : {2, 4, 7}) {
    CycleCensus many = count_cycles(g, CensusOptions{8, threads, 0});
    EXPECT_EQ(many.counts, one.counts);
    EXPECT_EQ(many.total, one.total);
  }
  EXPECT_EQ(one.count_at(4), 36);  // C(4,2)^2
}

TEST(CountCyclesTest, BudgetAbortsWithPartialResult) {
  Graph g = complete_bipartite(6, 6);
  try {
    count_cycles(g, CensusOptions{12, 1, 100});
    FAIL() << "expected BudgetExceededError";
  } catch (const BudgetExceededError& e) {
    CycleCensus full = count_cycles(g, 12);
    for (const auto& [len, count] : e.partial.counts) EXPECT_LE(count, full.count_at(len));
  }
}

TEST(EnumerateCyclesTest, CanonicalFormAndOrder) {
  Graph c4 = cycle_graph(4);
  auto cycles = enumerate_cycles(c4, 8);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].nodes, (std::vector<int>{0, 1, 2, 3}));

  Graph k33 = complete_bipartite(3, 3);
  auto all = enumerate_cycles(k33, 6);
  EXPECT_EQ(all.size(), 15u);
  std::vector<std::vector<int>> sequences;
  for (const CanonicalCycle& c : all) {
    // canonical: starts at the minimum, oriented second < last
    int min_node = *std::min_element(c.nodes.begin(), c.nodes.end());
    EXPECT_EQ(c.nodes.front(), min_node);
    EXPECT_LT(c.nodes[1], c.nodes.back());
    for (size_t i = 0; i + 1 < c.nodes.size(); ++i)
      EXPECT_TRUE(k33.has_edge(c.nodes[i], c.nodes[i + 1]));
    EXPECT_TRUE(k33.has_edge(c.nodes.front(), c.nodes.back()));
    std::vector<int> sorted = c.nodes;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    sequences.push_back(c.nodes);
  }
  EXPECT_TRUE(std::is_sorted(sequences.begin(), sequences.end()));
  EXPECT_TRUE(std::adjacent_find(sequences.begin(), sequences.end()) == sequences.end());

  EXPECT_TRUE(enumerate_cycles(path_graph(6), 6).empty());
}

TEST(CrossCheckTest, AgreesOnCyclesAndHeawood) {
  CrossCheck c6 = census_cross_check(cycle_graph(6), 6);
  EXPECT_EQ(c6.verdict, CrossCheck::Verdict::Agree);
  EXPECT_EQ(c6.trace, 132);
  EXPECT_EQ(c6.cycles_from_trace, 1);
  EXPECT_EQ(c6.cycles_from_census, 1);

  CrossCheck hw = census_cross_check(heawood(), 6);
  EXPECT_EQ(hw.verdict, CrossCheck::Verdict::Agree);
  EXPECT_EQ(hw.cycles_from_trace, 28);
  EXPECT_EQ(hw.cycles_from_census, 28);

  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CrossCheck k3 = census_cross_check(triangle, 3);
  EXPECT_EQ(k3.verdict, CrossCheck::Verdict::Agree);
  EXPECT_EQ(k3.trace, 6);
  EXPECT_EQ(k3.cycles_from_trace, 1);
}

TEST(CrossCheckTest, PreconditionsAndInconclusive) {
  EXPECT_THROW(census_cross_check(path_graph(4), 4), std::invalid_argument);  // acyclic
  EXPECT_THROW(census_cross_check(cycle_graph(6), 4), std::invalid_argument);  // not the girth
  CrossCheck big = census_cross_check(cycle_graph(10), 10);  // girth beyond the recursion cap
  EXPECT_EQ(big.verdict, CrossCheck::Verdict::Inconclusive);
  EXPECT_EQ(big.cycles_from_census, 1);
}

}  // namespace
}  // namespace cospec
