#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bflow/graph.hpp"

namespace bflow {

using BlockId = int;

// Blocks (maximal 2-connected components) of a connected claw-free block
// graph. Every block is a clique, every cut vertex lies in exactly two
// blocks, every other vertex in exactly one. Block ids are dense and
// ordered lexicographically by sorted vertex list.
class BlockDecomposition {
 public:
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int vertex_count() const noexcept { return static_cast<int>(blocks_of_.size()); }

  std::span<const Vertex> block(BlockId b) const { return blocks_.at(b); }
  int block_size(BlockId b) const { return static_cast<int>(blocks_.at(b).size()); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }

  std::span<const BlockId> blocks_of(Vertex v) const { return blocks_of_.at(v); }
  bool is_cut_vertex(Vertex v) const { return blocks_of_.at(v).size() == 2; }
  const std::vector<Vertex>& cut_vertices() const noexcept { return cut_vertices_; }

  // Size of the largest block, which is the clique number.
  int omega() const noexcept { return omega_; }

  // In a block graph the degree of v is the sum of (|B| - 1) over its blocks.
  int degree(Vertex v) const;

 private:
  friend BlockDecomposition validate_claw_free_block(const SimpleGraph& g);

  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::vector<BlockId>> blocks_of_;
  std::vector<Vertex> cut_vertices_;
  int omega_ = 0;
};

// Throws InvalidGraph with kNotConnected, kNotBlockGraph or kClaw.
BlockDecomposition validate_claw_free_block(const SimpleGraph& g);

struct ChildLink {
  Vertex cut;     // x_i, shared with the child block
  BlockId block;  // B^i
};

struct RootedBlock {
  BlockId parent = -1;
  Vertex cut_to_parent = -1;       // c(B), -1 at the root
  std::vector<ChildLink> children;  // x_1..x_p in merge order
  // x_0 = c(B) first (non-root only), then children's cut vertices in
  // merge order, then the remaining vertices of the block.
  std::vector<Vertex> order;
};

// The block-cut tree of a decomposition rooted at one block.
class RootedBlockTree {
 public:
  BlockId root() const noexcept { return root_; }
  int block_count() const noexcept { return static_cast<int>(nodes_.size()); }
  const RootedBlock& node(BlockId b) const { return nodes_.at(b); }
  bool is_root(BlockId b) const noexcept { return b == root_; }

  // Children before parents; the root comes last.
  const std::vector<BlockId>& post_order() const noexcept { return post_order_; }

  const BlockDecomposition& decomposition() const noexcept { return decomposition_; }
  int block_size(BlockId b) const { return decomposition_.block_size(b); }
  int degree(Vertex v) const { return decomposition_.degree(v); }
  int omega() const noexcept { return decomposition_.omega(); }

 private:
  friend RootedBlockTree root_decomposition(const BlockDecomposition& d, BlockId root);
  friend RootedBlockTree shuffle_children(const RootedBlockTree& t, std::uint64_t seed);

  void rebuild_orders();

  BlockDecomposition decomposition_;
  BlockId root_ = 0;
  std::vector<RootedBlock> nodes_;
  std::vector<BlockId> post_order_;
};

// Children are listed by increasing cut-vertex id. Throws PreconditionError
// for an invalid root.
RootedBlockTree root_decomposition(const BlockDecomposition& d, BlockId root);

// Same tree with every child list independently permuted.
RootedBlockTree shuffle_children(const RootedBlockTree& t, std::uint64_t seed);

// A validated claw-free block graph with its decomposition.
class BlockGraph {
 public:
  static BlockGraph validate(SimpleGraph g);
  static BlockGraph from_tree(const Tree& t);

  const SimpleGraph& graph() const noexcept { return graph_; }
  const BlockDecomposition& blocks() const noexcept { return blocks_; }
  int omega() const noexcept { return blocks_.omega(); }

 private:
  BlockGraph(SimpleGraph g, BlockDecomposition d) : graph_(std::move(g)), blocks_(std::move(d)) {}

  SimpleGraph graph_;
  BlockDecomposition blocks_;
};

}  // namespace bflow
