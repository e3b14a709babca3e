#include "cospec/switching.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"
#include "test_util.hpp"

namespace cospec {
namespace {

TEST(ValidatePartitionTest, StarFullNeighborhoodsAreValid) {
  Graph star = complete_bipartite(1, 4);  // center 0, leaves 1..4
  SwitchingPartition all_leaves = make_partition(star, {{1, 2, 3, 4}});
  ValidationReport r = validate_partition(star, all_leaves);
  EXPECT_TRUE(r.valid);
  ASSERT_EQ(r.y_profile.size(), 1u);
  EXPECT_EQ(r.y_profile[0][0], YClass::Full);
  ASSERT_FALSE(r.cell_degree_matrix.empty());
  EXPECT_EQ(r.cell_degree_matrix[0][0], 0);

  SwitchingPartition three_leaves = make_partition(star, {{1, 2, 3}});
  ValidationReport r3 = validate_partition(star, three_leaves);
  EXPECT_TRUE(r3.valid);  // center sees all 3, leaf 4 sees 0; odd cells allow 0/full
}

TEST(ValidatePartitionTest, CenterPlusLeafCellIsValidAndSwitchesToAStar) {
  // {center, one leaf}: both nodes have one neighbor inside the cell and every
  // outside leaf sees exactly half of it, so the conditions hold; the switch
  // re-centers the star on the chosen leaf.
  Graph star = complete_bipartite(1, 4);
  SwitchingPartition p = make_partition(star, {{0, 1}});
  ValidationReport r = validate_partition(star, p);
  EXPECT_TRUE(r.valid);
  Graph switched = apply_switching(star, p);
  EXPECT_TRUE(cospectral(star, switched));
  EXPECT_EQ(switched.degree(1), 4);
  EXPECT_EQ(switched.degree(0), 1);
}

TEST(ValidatePartitionTest, EquitabilityViolationCarriesWitness) {
  Graph c6 = cycle_graph(6);
  SwitchingPartition p = make_partition(c6, {{0, 1, 2}});
  ValidationReport r = validate_partition(c6, p);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(r.cell_degree_matrix.empty());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].cell, 0);
}

TEST(ValidatePartitionTest, BadYNeighborCountCarriesWitness) {
  Graph p5 = path_graph(5);
  SwitchingPartition p = make_partition(p5, {{0, 2, 4}});
  ValidationReport r = validate_partition(p5, p);
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.violations.empty());
  // node 1 (and 3) see two nodes of a 3-cell: neither 0, half nor full
  EXPECT_EQ(r.violations[0].node, 1);
  EXPECT_EQ(r.y_profile[0][0], YClass::Invalid);
}

TEST(ValidatePartitionTest, EmptyYIsAllowedAndFlagged) {
  Graph c6 = cycle_graph(6);
  SwitchingPartition p = make_partition(c6, {{0}, {1}, {2}, {3}, {4}, {5}});
  ValidationReport r = validate_partition(c6, p);
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.y_empty);
  // the cell-degree matrix degenerates to the adjacency matrix
  EXPECT_EQ(r.cell_degree_matrix[0][1], 1);
  EXPECT_EQ(r.cell_degree_matrix[0][3], 0);
}

TEST(ValidatePartitionTest, MalformedPartitionsThrow) {
  Graph c6 = cycle_graph(6);
  EXPECT_THROW(make_partition(c6, {}), std::invalid_argument);
  EXPECT_THROW(make_partition(c6, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_partition(c6, {{0}, {0}}), std::invalid_argument);
  EXPECT_THROW(make_partition(c6, {{6}}), std::invalid_argument);
  EXPECT_THROW(make_partition(c6, {{0}, {}}), std::invalid_argument);
  SwitchingPartition holey{{{0, 1}}, {2, 3}};  // nodes 4,5 unassigned
  EXPECT_THROW(validate_partition(c6, holey), std::invalid_argument);
}

TEST(ApplySwitchingTest, NoHalfCellsMeansIdentity) {
  Graph star = complete_bipartite(1, 4);
  SwitchingPartition p = make_partition(star, {{1, 2, 3, 4}});
  EXPECT_TRUE(apply_switching(star, p) == star);
}

TEST(ApplySwitchingTest, PathEndpointsCell) {
  Graph p4 = path_graph(4);
  SwitchingPartition p = make_partition(p4, {{0, 3}});
  Graph switched = apply_switching(p4, p);
  Graph expected(4, {{0, 2}, {1, 2}, {1, 3}});
  EXPECT_TRUE(switched == expected);
  EXPECT_EQ(switched.edge_count(), p4.edge_count());
  EXPECT_TRUE(cospectral(p4, switched));
}

TEST(ApplySwitchingTest, RefusesInvalidPartition) {
  Graph c6 = cycle_graph(6);
  SwitchingPartition p = make_partition(c6, {{0, 1, 2}});
  EXPECT_THROW(apply_switching(c6, p), std::invalid_argument);
}

TEST(ApplySwitchingTest, InvolutionAndCospectralityOnSmallCases) {
  struct Case {
    Graph g;
    SwitchingPartition p;
  };
  std::vector<Case> cases;
  {
    Graph star = complete_bipartite(1, 4);
    cases.push_back({star, make_partition(star, {{0, 1}})});
    cases.push_back({star, make_partition(star, {{1, 2, 3, 4}})});
  }
  {
    Graph p4 = path_graph(4);
    cases.push_back({p4, make_partition(p4, {{0, 3}})});
  }
  {
    Graph k24 = complete_bipartite(2, 4);
    cases.push_back({k24, make_partition(k24, {{0, 2}})});
  }
  for (const auto& [g, p] : cases) {
    EXPECT_TRUE(switching_is_involution_check(g, p));
    Graph switched = apply_switching(g, p);
    EXPECT_EQ(switched.edge_count(), g.edge_count());
    EXPECT_TRUE(cospectral(g, switched));
  }
}

TEST(ClassifyCellsTest, TypesAndSplits) {
  Graph c6 = cycle_graph(6);
  Bipartition b = bipartition(c6);  // U = even indices
  SwitchingPartition p = make_partition(c6, {{0, 2}, {1, 3}, {4, 5}});
  CellTyping typing = classify_cells(c6, b, p);
  EXPECT_EQ(typing.types[0], CellType::Type1);
  EXPECT_EQ(typing.types[1], CellType::Type2);
  EXPECT_EQ(typing.types[2], CellType::Type3_1);
  EXPECT_EQ(typing.splits[2], (std::pair<int, int>{1, 1}));

  SwitchingPartition q = make_partition(c6, {{0, 1, 2}});
  CellTyping unbalanced = classify_cells(c6, b, q);
  EXPECT_EQ(unbalanced.types[0], CellType::Type3_2);
  EXPECT_EQ(unbalanced.splits[0], (std::pair<int, int>{2, 1}));
}

TEST(StructuralPropertiesTest, RequiresBiRegular) {
  Graph p4 = path_graph(4);  // degrees 1,2,2,1 on alternating sides: irregular
  SwitchingPartition p = make_partition(p4, {{0, 3}});
  EXPECT_THROW(check_structural_properties(p4, bipartition(p4), p), std::invalid_argument);
}

TEST(StructuralPropertiesTest, RequiresValidPartition) {
  // one side of the Heawood graph as a single cell: every outside node sees 3
  // of 7, which is neither 0, half nor full, so validation fails first
  Graph h = heawood();
  std::vector<int> evens;
  for (int v = 0; v < 14; v += 2) evens.push_back(v);
  SwitchingPartition p = make_partition(h, {evens});
  EXPECT_FALSE(validate_partition(h, p).valid);
  EXPECT_THROW(check_structural_properties(h, bipartition(h), p), std::invalid_argument);
}

TEST(StructuralPropertiesTest, HoldOnSingletonCellsOfCycle) {
  Graph c6 = cycle_graph(6);
  SwitchingPartition p = make_partition(c6, {{0}, {1}, {2}, {3}, {4}, {5}});
  StructuralReport r = check_structural_properties(c6, bipartition(c6), p);
  EXPECT_TRUE(r.all_hold());
}

TEST(StructuralPropertiesTest, HoldOnBalancedMixedCellOfK24) {
  Graph k24 = complete_bipartite(2, 4);
  Bipartition b = bipartition(k24);
  SwitchingPartition p = make_partition(k24, {{0, 2}});
  StructuralReport r = check_structural_properties(k24, b, p);
  EXPECT_TRUE(r.all_hold());

  Graph switched = apply_switching(k24, p);
  DegreePreservation dp = verify_degree_preservation(k24, switched, b, p);
  EXPECT_TRUE(dp.equal);
  EXPECT_EQ(dp.before.u_side, dp.after.u_side);
  // the induced bipartition is valid for the switched graph
  Bipartition induced = induced_bipartition(b, classify_cells(k24, b, p));
  EXPECT_TRUE(valid_bipartition(switched, induced));
}

TEST(InducedBipartitionTest, PureSideCellsKeepLabels) {
  Graph c6 = cycle_graph(6);
  Bipartition b = bipartition(c6);
  SwitchingPartition p = make_partition(c6, {{0, 2}, {4}});
  CellTyping typing = classify_cells(c6, b, p);
  Bipartition induced = induced_bipartition(b, typing);
  EXPECT_EQ(induced.side_of, b.side_of);
}

TEST(InducedBipartitionTest, MixedCellsSwapLabels) {
  Graph k24 = complete_bipartite(2, 4);
  Bipartition b = bipartition(k24);
  SwitchingPartition p = make_partition(k24, {{0, 2}});
  Bipartition induced = induced_bipartition(b, classify_cells(k24, b, p));
  EXPECT_NE(induced.side(0), b.side(0));
  EXPECT_NE(induced.side(2), b.side(2));
  EXPECT_EQ(induced.side(1), b.side(1));
}

TEST(ValidationReportTest, MatrixIsConsistentWithPerNodeRecount) {
  Graph k24 = complete_bipartite(2, 4);
  SwitchingPartition p = make_partition(k24, {{0, 2}, {1, 3}});
  ValidationReport r = validate_partition(k24, p);
  ASSERT_TRUE(r.valid);
  for (int i = 0; i < p.cell_count(); ++i)
    for (int j = 0; j < p.cell_count(); ++j)
      for (int v : p.cells[static_cast<size_t>(i)]) {
        int count = 0;
        for (int w : p.cells[static_cast<size_t>(j)])
          if (k24.has_edge(v, w)) ++count;
        EXPECT_EQ(count, r.cell_degree_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      }
}

// Bi-regular graphs with unequal side degrees admit no Type-3.2 cells in a
// valid partition; randomized partitions of K_{a,b} probe this.
TEST(RemarkTest, NoType32CellsWhenSideDegreesDiffer) {
  std::mt19937 rng(555);
  int valid_partitions = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int a = 2 + static_cast<int>(rng() % 3);
    int b = a + 1 + static_cast<int>(rng() % 3);  // a != b
    Graph g = complete_bipartite(a, b);
    Bipartition bip = bipartition(g);

    int n = g.node_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> cells;
    size_t pos = 0;
    int cell_count = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < cell_count && pos < perm.size(); ++c) {
      size_t size = 1 + rng() % 3;
      std::vector<int> cell;
      for (size_t i = 0; i < size && pos < perm.size(); ++i) cell.push_back(perm[pos++]);
      cells.push_back(std::move(cell));
    }
    SwitchingPartition p = make_partition(g, std::move(cells));
    ValidationReport r = validate_partition(g, p);
    if (!r.valid) continue;
    ++valid_partitions;
    CellTyping typing = classify_cells(g, bip, p);
    for (CellType t : typing.types) EXPECT_NE(t, CellType::Type3_2);
  }
  EXPECT_GT(valid_partitions, 50);  // the probe must not be vacuous
}

}  // namespace
}  // namespace cospec
