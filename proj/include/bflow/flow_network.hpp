#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bflow/blocks.hpp"

namespace bflow {

using NodeId = int;

enum class NodeKind {
  kBlockVertex,  // B'_x, capacity 1
  kBlockCash,    // (B'), capacity k - |B'|
  kPairCash,     // (B^i, B'), capacity k - 1 or d(x_i) - k + 1
  kSource,       // <x_i>, emits one unit
};

const char* to_string(NodeKind kind);

struct NetNode {
  NodeKind kind;
  BlockId block = -1;         // B' (for kPairCash: the child block B^i)
  BlockId parent_block = -1;  // kPairCash only
  Vertex vertex = -1;         // kBlockVertex and kSource
  int capacity = 0;
};

// Node-capacitated network whose unit source-to-sink paths model the
// colors forced by a set W of would-be realizing vertices. A flow routing
// every source exists iff some proper k-coloring lets W realize |W|
// distinct colors.
struct FlowNetwork {
  int k = 0;
  std::vector<NetNode> nodes;
  std::vector<std::pair<NodeId, NodeId>> arcs;
  std::vector<NodeId> sources;
  std::vector<NodeId> sinks;  // every node of the root block

  // Lookup tables; -1 where absent.
  std::vector<std::vector<NodeId>> vertex_node;  // [block][position in block]
  std::vector<NodeId> cash_node;                 // [block]
  std::vector<NodeId> pair_node;                 // [child block]

  NodeId node_of(BlockId b, Vertex x, const BlockDecomposition& d) const;

  // "id kind capacity" per node, then "from -> to" per arc.
  std::string dump() const;
};

struct FlowResult {
  int value = 0;
  std::vector<int> per_node;  // units through each node
  std::vector<int> per_arc;   // units on each arc, indexed like FlowNetwork::arcs
};

// Requires k > omega and W a set of k-dense vertices; throws
// PreconditionError otherwise.
FlowNetwork build_network(const RootedBlockTree& t, std::span<const Vertex> w, int k);

FlowResult max_flow(const FlowNetwork& net);

bool is_flow_feasible(const RootedBlockTree& t, std::span<const Vertex> w, int k);

// Brute force over every W within the k-dense set with |W| <= k. Only
// meant for small graphs; used to cross-check the dynamic program.
int max_feasible_source_set(const RootedBlockTree& t, int k);

}  // namespace bflow
