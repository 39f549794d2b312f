#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "bflow/degree.hpp"
#include "bflow/error.hpp"
#include "bflow/flow_network.hpp"
#include "bflow/generators.hpp"
#include "test_util.hpp"

using namespace bflow;

namespace {

RootedBlockTree bowtie_rooted() { return root_decomposition(fixtures::bowtie().blocks(), 0); }

// Conservation at every node that is neither a source nor a sink, arc
// flows nonnegative, node flow within capacity, and the units absorbed by
// the sinks add up to the flow value.
void expect_valid_flow(const FlowNetwork& net, const FlowResult& r) {
  const int n = static_cast<int>(net.nodes.size());
  ASSERT_EQ(static_cast<int>(r.per_node.size()), n);
  ASSERT_EQ(r.per_arc.size(), net.arcs.size());
  std::vector<int> in(n, 0);
  std::vector<int> out(n, 0);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    ASSERT_GE(r.per_arc[a], 0);
    out[net.arcs[a].first] += r.per_arc[a];
    in[net.arcs[a].second] += r.per_arc[a];
  }
  std::vector<char> is_source(n, 0);
  std::vector<char> is_sink(n, 0);
  for (NodeId s : net.sources) is_source[s] = 1;
  for (NodeId s : net.sinks) is_sink[s] = 1;
  int absorbed = 0;
  for (NodeId v = 0; v < n; ++v) {
    EXPECT_LE(r.per_node[v], net.nodes[v].capacity);
    EXPECT_GE(r.per_node[v], 0);
    if (is_source[v]) {
      EXPECT_EQ(in[v], 0);
      EXPECT_EQ(out[v], r.per_node[v]);
    } else if (is_sink[v]) {
      EXPECT_EQ(in[v], r.per_node[v]);
      absorbed += in[v] - out[v];
    } else {
      EXPECT_EQ(in[v], out[v]);
      EXPECT_EQ(in[v], r.per_node[v]);
    }
  }
  EXPECT_EQ(absorbed, r.value);
  EXPECT_LE(r.value, static_cast<int>(net.sources.size()));
}

}  // namespace

TEST(BuildNetwork, BowtieCaseTwoCounts) {
  RootedBlockTree t = bowtie_rooted();
  const std::vector<Vertex> w{0};
  FlowNetwork net = build_network(t, w, 5);
  EXPECT_EQ(net.nodes.size(), 10u);
  EXPECT_EQ(net.arcs.size(), 10u);
  ASSERT_EQ(net.sources.size(), 1u);
  EXPECT_EQ(net.nodes[net.pair_node[1]].capacity, 0);
  EXPECT_EQ(net.nodes[net.cash_node[0]].capacity, 2);
  EXPECT_EQ(net.nodes[net.cash_node[1]].capacity, 2);
  EXPECT_EQ(net.sinks.size(), 4u);
  // The source's only arc enters the child's copy of e0.
  int out_arcs = 0;
  for (auto [from, to] : net.arcs) {
    if (from == net.sources[0]) {
      ++out_arcs;
      EXPECT_EQ(to, net.node_of(1, 0, t.decomposition()));
    }
  }
  EXPECT_EQ(out_arcs, 1);
}

TEST(BuildNetwork, BowtieGoldenDump) {
  const std::vector<Vertex> w{0};
  const std::string expected =
      "k 5\n"
      "nodes 10\n"
      "0 block-vertex 1 B0 x0\n"
      "1 block-vertex 1 B0 x1\n"
      "2 block-vertex 1 B0 x2\n"
      "3 block-cash 2 B0\n"
      "4 block-vertex 1 B1 x0\n"
      "5 block-vertex 1 B1 x3\n"
      "6 block-vertex 1 B1 x4\n"
      "7 block-cash 2 B1\n"
      "8 pair-cash 0 B1 B0\n"
      "9 source 1 x0\n"
      "arcs 10\n"
      "5 -> 8\n"
      "5 -> 3\n"
      "6 -> 8\n"
      "6 -> 3\n"
      "7 -> 1\n"
      "8 -> 1\n"
      "7 -> 2\n"
      "8 -> 2\n"
      "4 -> 0\n"
      "9 -> 4\n"
      "sinks 0 1 2 3\n";
  EXPECT_EQ(build_network(bowtie_rooted(), w, 5).dump(), expected);
}

TEST(BuildNetwork, CaseOneGadget) {
  RootedBlockTree t = bowtie_rooted();
  FlowNetwork net = build_network(t, std::vector<Vertex>{}, 4);
  EXPECT_TRUE(net.sources.empty());
  EXPECT_EQ(net.nodes.size(), 9u);
  EXPECT_EQ(net.nodes[net.pair_node[1]].capacity, 3);
  EXPECT_EQ(net.nodes[net.pair_node[1]].kind, NodeKind::kPairCash);
  EXPECT_EQ(net.pair_node[0], -1);
}

TEST(BuildNetwork, Preconditions) {
  RootedBlockTree t = bowtie_rooted();
  EXPECT_THROW(build_network(t, std::vector<Vertex>{0}, 6), PreconditionError);
  EXPECT_THROW(build_network(t, std::vector<Vertex>{0}, 3), PreconditionError);
  EXPECT_THROW(build_network(t, std::vector<Vertex>{0, 1}, 5), PreconditionError);
  EXPECT_THROW(build_network(t, std::vector<Vertex>{0, 0}, 4), PreconditionError);
  EXPECT_THROW(build_network(t, std::vector<Vertex>{7}, 4), PreconditionError);
  EXPECT_THROW(is_flow_feasible(t, std::vector<Vertex>{0}, 6), PreconditionError);
}

TEST(MaxFlow, EmptySourceSet) {
  RootedBlockTree t = bowtie_rooted();
  FlowNetwork net = build_network(t, std::vector<Vertex>{}, 5);
  FlowResult r = max_flow(net);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(is_flow_feasible(t, std::vector<Vertex>{}, 5));
}

TEST(MaxFlow, BowtieSingleSource) {
  RootedBlockTree t = bowtie_rooted();
  const std::vector<Vertex> w{0};
  FlowNetwork net = build_network(t, w, 5);
  FlowResult r = max_flow(net);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.per_node[net.sources[0]], 1);
  EXPECT_EQ(r.per_node[net.node_of(1, 0, t.decomposition())], 1);
  EXPECT_EQ(r.per_node[net.node_of(0, 0, t.decomposition())], 1);
  expect_valid_flow(net, r);
  EXPECT_TRUE(is_flow_feasible(t, w, 5));
}

TEST(MaxFlow, TriangleChainEveryRoot) {
  // {0,1,2}-2-{2,3,4}-4-{4,5,6}; both cut vertices are 4-dense.
  BlockGraph g = BlockGraph::validate(
      fixtures::graph_of(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}));
  const std::vector<Vertex> w{2, 4};
  const bool reference = is_flow_feasible(root_decomposition(g.blocks(), 0), w, 4);
  for (BlockId r = 0; r < 3; ++r) {
    RootedBlockTree t = root_decomposition(g.blocks(), r);
    FlowNetwork net = build_network(t, w, 4);
    FlowResult f = max_flow(net);
    expect_valid_flow(net, f);
    EXPECT_EQ(f.value == 2, reference);
  }
}

TEST(MaxFlow, RandomNetworksAreValidFlows) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    Tree tree = fixtures::hub_tree(3 + static_cast<int>(rng() % 14), rng);
    BlockGraph g = BlockGraph::from_tree(tree);
    RootedBlockTree t = root_decomposition(g.blocks(), static_cast<BlockId>(rng() % g.blocks().block_count()));
    const int k = g.omega() + 1 + static_cast<int>(rng() % 3);
    std::vector<Vertex> dense = dense_vertices(g.graph(), k);
    std::shuffle(dense.begin(), dense.end(), rng);
    dense.resize(std::min<std::size_t>(dense.size(), k));
    FlowNetwork net = build_network(t, dense, k);
    for (const NetNode& node : net.nodes) EXPECT_GE(node.capacity, 0);
    for (auto [from, to] : net.arcs) {
      EXPECT_GE(from, 0);
      EXPECT_LT(to, static_cast<int>(net.nodes.size()));
    }
    FlowResult r = max_flow(net);
    expect_valid_flow(net, r);
    EXPECT_LE(r.value, k);
  }
}

TEST(Feasibility, SubflowClosure) {
  std::mt19937_64 rng(23);
  int feasible_sets = 0;
  for (int i = 0; i < 120; ++i) {
    BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(3 + static_cast<int>(rng() % 12), rng));
    RootedBlockTree t = root_decomposition(g.blocks(), 0);
    const int k = g.omega() + 1 + static_cast<int>(rng() % 2);
    std::vector<Vertex> dense = dense_vertices(g.graph(), k);
    if (dense.size() > 12) dense.resize(12);
    for (unsigned mask = 1; mask < (1u << dense.size()); ++mask) {
      if (std::popcount(mask) > std::min(k, 4)) continue;
      std::vector<Vertex> w;
      for (std::size_t b = 0; b < dense.size(); ++b) {
        if (mask >> b & 1) w.push_back(dense[b]);
      }
      if (!is_flow_feasible(t, w, k)) continue;
      ++feasible_sets;
      for (std::size_t drop = 0; drop < w.size(); ++drop) {
        std::vector<Vertex> smaller = w;
        smaller.erase(smaller.begin() + static_cast<long>(drop));
        EXPECT_TRUE(is_flow_feasible(t, smaller, k));
      }
    }
  }
  EXPECT_GT(feasible_sets, 100);
}

TEST(Feasibility, RootIndependent) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 80; ++i) {
    BlockGraph g = BlockGraph::from_tree(fixtures::hub_tree(3 + static_cast<int>(rng() % 10), rng));
    const int k = g.omega() + 1;
    const int reference = max_feasible_source_set(root_decomposition(g.blocks(), 0), k);
    for (BlockId r = 1; r < g.blocks().block_count(); ++r) {
      EXPECT_EQ(max_feasible_source_set(root_decomposition(g.blocks(), r), k), reference);
    }
  }
}
