#include <gtest/gtest.h>

#include <random>

#include "bflow/degree.hpp"
#include "bflow/dp_solver.hpp"
#include "bflow/error.hpp"
#include "bflow/flow_network.hpp"
#include "bflow/generators.hpp"
#include "bflow/oracle.hpp"
#include "test_util.hpp"

using namespace bflow;

namespace {

void expect_same_tables(const STable& a, const STable& b) {
  ASSERT_EQ(a.cash_capacity(), b.cash_capacity());
  for (int bb = 0; bb <= 1; ++bb) {
    for (int j = 0; j <= a.cash_capacity(); ++j) {
      EXPECT_EQ(a.get({bb, j}), b.get({bb, j})) << "block " << a.block() << " S(" << bb << ',' << j << ')';
    }
  }
}

}  // namespace

TEST(BaseTable, OnlyTheEmptyFlow) {
  const BlockGraph g = fixtures::bowtie();
  const RootedBlockTree t = root_decomposition(g.blocks(), 0);
  const SolveContext ctx{5, &t};
  PTable p = base_p_table(1, ctx);
  EXPECT_EQ(p.merged(), 0);
  EXPECT_EQ(p.cash_capacity(), 2);
  EXPECT_EQ(p.get({0, 0, 0}), 0);
  EXPECT_EQ(p.get({1, 0, 0}), kInfeasible);
  EXPECT_EQ(p.get({0, 0, 2}), kInfeasible);
  EXPECT_EQ(ctx.q(0), 3);
  EXPECT_EQ(ctx.q(1), 2);
}

TEST(WeakCombine, EmptyMerge) {
  auto v = weak_combine({0, 0, 0}, 0, {0, 0}, 0, {0, 0, 0}, {3, 0});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 0);
}

TEST(WeakCombine, ChildCoversAllLacks) {
  auto v = weak_combine({0, 1, 0}, 0, {1, 2}, 3, {1, 2, 1}, {4, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 2);
}

TEST(WeakCombine, CashCannotShrink) {
  EXPECT_FALSE(weak_combine({0, 1, 1}, 0, {0, 0}, 5, {1, 2, 0}, {4, 1}));
}

TEST(WeakCombine, ParkedUnitFillsTheCut) {
  // No child supply at all: only a parent unit parked beyond x_l can
  // occupy B_{x_{l+1}}.
  EXPECT_FALSE(weak_combine({0, 0, 0}, 0, {0, 0}, 0, {0, 1, 0}, {4, 0}));
  auto v = weak_combine({0, 0, 0}, 2, {0, 0}, 0, {0, 1, 0}, {4, 0});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 1);
}

TEST(WeakCombine, ChildUnitOnlyOnItsCut) {
  // With b'' = 1 the child's c(B) unit must land on B_{x_{l+1}}.
  EXPECT_FALSE(weak_combine({0, 0, 0}, 0, {1, 0}, 0, {0, 0, 0}, {3, 0}));
  auto v = weak_combine({0, 0, 0}, 0, {1, 0}, 0, {0, 1, 0}, {3, 0});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 0);
}

TEST(StrongCombine, RepeatCapacityRoutesUnits) {
  auto v = strong_combine({0, 1, 0}, 1, {0, 1}, 2, {0, 2, 1}, {4, 1}, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 2);
}

TEST(StrongCombine, NeedsChildWithoutParentUnit) {
  EXPECT_FALSE(strong_combine({0, 1, 0}, 1, {1, 1}, 2, {0, 2, 1}, {4, 1}, 2));
}

TEST(StrongCombine, CutLackCoveredByChildCash) {
  auto v = strong_combine({0, 1, 0}, 0, {0, 1}, 2, {0, 3, 0}, {4, 2}, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 1);
}

TEST(StrongCombine, SourceAlwaysOccupiesItsCut) {
  EXPECT_FALSE(strong_combine({0, 1, 0}, 3, {0, 0}, 3, {0, 1, 0}, {4, 1}, 1));
  EXPECT_FALSE(strong_combine({0, 0, 0}, 0, {0, 0}, 0, {0, 0, 0}, {3, 0}, -1));
}

TEST(CombineChild, LeafChildWithoutDenseCut) {
  // Bowtie with k = 6 is out of range for the network, but the table step
  // is well defined: d(e0) = 4 < k - 1 so only the weak merge applies.
  const BlockGraph g = fixtures::bowtie();
  const RootedBlockTree t = root_decomposition(g.blocks(), 0);
  const SolveContext ctx{6, &t};
  STable leaf = finalize_s_table(base_p_table(1, ctx), ctx);
  PTable p1 = combine_child(base_p_table(0, ctx), leaf, ctx);
  EXPECT_EQ(p1.get({0, 0, 0}), 0);
  EXPECT_EQ(p1.get({0, 1, 0}), kInfeasible);
}

TEST(CombineChild, BowtieHandRun) {
  const BlockGraph g = fixtures::bowtie();
  const RootedBlockTree t = root_decomposition(g.blocks(), 0);
  const SolveContext ctx{5, &t};
  STable leaf = finalize_s_table(base_p_table(1, ctx), ctx);
  EXPECT_EQ(leaf.get({0, 0}), 0);
  EXPECT_EQ(leaf.get({1, 0}), kInfeasible);
  EXPECT_EQ(leaf.get({0, 1}), kInfeasible);

  PTable p1 = combine_child(base_p_table(0, ctx), leaf, ctx);
  EXPECT_EQ(p1.get({0, 0, 0}), 0);
  EXPECT_EQ(p1.get({0, 1, 0}), 0);  // e0 becomes a source, repeat capacity 0
  EXPECT_EQ(p1.get({0, 1, 1}), kInfeasible);
  EXPECT_EQ(p1.get({0, 0, 1}), kInfeasible);

  STable root = finalize_s_table(p1, ctx);
  EXPECT_EQ(root.get({0, 0}), 1);
  EXPECT_EQ(root.get({0, 1}), kInfeasible);
  EXPECT_EQ(max_basis_size(t, 5), 1);
}

TEST(Finalize, NoChildrenCopiesBaseTable) {
  const BlockGraph g = BlockGraph::from_tree(star(4));
  const RootedBlockTree t = root_decomposition(g.blocks(), 0);
  const SolveContext ctx{6, &t};
  PTable p = base_p_table(0, ctx);
  STable s = finalize_s_table(p, ctx);
  for (int j = 0; j <= s.cash_capacity(); ++j) EXPECT_EQ(s.get({0, j}), p.get({0, 0, j}));
}

TEST(Finalize, DominatesTheZeroColumn) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(4 + static_cast<int>(rng() % 20), rng));
    const RootedBlockTree t = root_decomposition(g.blocks(), 0);
    const SolveContext ctx{g.omega() + 1, &t};
    std::vector<STable> solved(t.block_count());
    for (BlockId b : t.post_order()) {
      PTable p = base_p_table(b, ctx);
      for (const ChildLink& c : t.node(b).children) p = combine_child(p, solved[c.block], ctx);
      solved[b] = finalize_s_table(p, ctx);
      for (int bb = 0; bb <= 1; ++bb) {
        for (int j = 0; j <= p.cash_capacity(); ++j) {
          EXPECT_GE(solved[b].get({bb, j}), p.get({bb, 0, j}));
          for (int j1 = 0; j1 <= p.merged(); ++j1) {
            const int v = p.get({bb, j1, j});
            if (v == kInfeasible) continue;
            // Values count units parked on the unmerged part of the block.
            EXPECT_GE(v, 0);
            EXPECT_LE(v, ctx.q(b) - p.merged());
          }
        }
      }
      if (t.is_root(b)) {
        for (int j = 0; j <= solved[b].cash_capacity(); ++j) EXPECT_EQ(solved[b].get({1, j}), kInfeasible);
      }
    }
  }
}

TEST(Decide, Examples) {
  const BlockGraph k5 = BlockGraph::from_tree(star(5));
  EXPECT_TRUE(decide_k(k5, 5));
  EXPECT_FALSE(decide_k(k5, 4));
  EXPECT_FALSE(decide_k(k5, 6));
  const BlockGraph bowtie = fixtures::bowtie();
  EXPECT_TRUE(decide_k(bowtie, 3));
  EXPECT_FALSE(decide_k(bowtie, 4));
  EXPECT_THROW(decide_k(bowtie, 0), PreconditionError);
  EXPECT_THROW(max_basis_size(root_decomposition(bowtie.blocks(), 0), 3), PreconditionError);
}

TEST(BChromatic, ClosedForms) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(b_chromatic(BlockGraph::from_tree(star(n))), n);
  EXPECT_EQ(b_chromatic(fixtures::bowtie()), 3);
  EXPECT_EQ(b_chromatic(BlockGraph::validate(fixtures::graph_of(1, {}))), 1);
}

TEST(BChromatic, PathWithSixEdgesMatchesOracle) {
  const BlockGraph g = BlockGraph::from_tree(path(6));
  int oracle = 0;
  for (int k = g.omega(); k <= m_degree(g.graph()); ++k) {
    if (max_realized_colors(g.graph(), k) == k) oracle = k;
  }
  EXPECT_EQ(b_chromatic(g), oracle);
  EXPECT_EQ(oracle, 3);
}

TEST(BChromatic, TraceScansDownward) {
  const BlockGraph g = BlockGraph::from_tree(path(6));
  BChromaticResult r = b_chromatic_traced(g);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().k, m_degree(g.graph()));
  EXPECT_TRUE(r.trace.back().decision);
  EXPECT_EQ(r.trace.back().k, r.value);
  for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
    EXPECT_FALSE(r.trace[i].decision);
    EXPECT_EQ(r.trace[i].k, r.trace[i + 1].k + 1);
  }
}

TEST(Structure, ChildOrderLeavesEveryTableUnchanged) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(3 + static_cast<int>(rng() % 10), rng));
    const RootedBlockTree t = root_decomposition(g.blocks(), 0);
    for (int k = g.omega() + 1; k <= m_degree(g.graph()); ++k) {
      const std::vector<STable> reference = fixtures::all_tables(t, k);
      for (int s = 0; s < 3; ++s) {
        const std::vector<STable> shuffled = fixtures::all_tables(shuffle_children(t, rng()), k);
        for (BlockId b = 0; b < t.block_count(); ++b) expect_same_tables(reference[b], shuffled[b]);
      }
    }
  }
}

TEST(Structure, EveryRootSameAnswer) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(3 + static_cast<int>(rng() % 20), rng));
    for (int k = g.omega() + 1; k <= m_degree(g.graph()); ++k) {
      const int reference = max_basis_size(root_decomposition(g.blocks(), 0), k);
      for (BlockId r = 1; r < g.blocks().block_count(); ++r) {
        EXPECT_EQ(max_basis_size(root_decomposition(g.blocks(), r), k), reference);
      }
    }
  }
}

TEST(CrossCheck, HubTreesAgainstFlowChecker) {
  std::mt19937_64 rng(43);
  int instances = 0;
  for (int i = 0; i < 250; ++i) {
    const BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(3 + static_cast<int>(rng() % 14), rng));
    const RootedBlockTree t =
        root_decomposition(g.blocks(), static_cast<BlockId>(rng() % g.blocks().block_count()));
    for (int k = g.omega() + 1; k <= fixtures::max_degree(g.graph()) + 1; ++k) {
      if (dense_vertices(g.graph(), k).size() > 16) continue;
      ++instances;
      EXPECT_EQ(max_basis_size(t, k), max_feasible_source_set(t, k)) << to_edge_list(g.graph()) << "k=" << k;
    }
  }
  EXPECT_GT(instances, 500);
}

TEST(CrossCheck, HubTreesAgainstColoringOracle) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 120; ++i) {
    const BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(4 + static_cast<int>(rng() % 8), rng));
    for (int k = g.omega(); k <= m_degree(g.graph()); ++k) {
      EXPECT_EQ(decide_k(g, k), max_realized_colors(g.graph(), k) == k)
          << to_edge_list(g.graph()) << "k=" << k;
    }
  }
}

TEST(Bounds, SandwichOnRandomTrees) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const BlockGraph g = BlockGraph::from_tree(random_tree(1 + static_cast<int>(rng() % 200), rng()));
    const int b = b_chromatic(g);
    EXPECT_GE(b, g.omega());
    EXPECT_LE(b, m_degree(g.graph()));
  }
}

TEST(Mutation, OffByOneIsCaught) {
  int caught = 0;
  for (int e = 1; e <= 7; ++e) {
    for (const Tree& t : all_trees(e)) {
      const BlockGraph g = BlockGraph::from_tree(t);
      const RootedBlockTree tree = root_decomposition(g.blocks(), 0);
      for (int k = g.omega() + 1; k <= m_degree(g.graph()); ++k) {
        if (max_basis_size(tree, k, Mutation::kWeakValueOffByOne) != max_feasible_source_set(tree, k)) ++caught;
      }
    }
  }
  EXPECT_GT(caught, 0);
}

TEST(Trace, RecordsEveryBlock) {
  const BlockGraph g = fixtures::bowtie();
  DpTrace trace;
  max_basis_size(root_decomposition(g.blocks(), 0), 5, Mutation::kNone, &trace);
  const std::string text = trace.text();
  EXPECT_NE(text.find("block 1, S(0,0) = 0"), std::string::npos);
  EXPECT_NE(text.find("block 0, entry (0,1,0) = 0"), std::string::npos);
  EXPECT_NE(text.find("block 0, S(0,0) = 1"), std::string::npos);
}

TEST(Decide, InvalidRootRejectedEvenWhenTrivial) {
  SolveOptions opt;
  opt.root = 7;
  EXPECT_THROW(decide_k(fixtures::bowtie(), 3, opt), PreconditionError);
  EXPECT_THROW(b_chromatic(fixtures::bowtie(), opt), PreconditionError);
}
