#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bflow/blocks.hpp"

namespace bflow {

// Stored table values are nonnegative; this marks an unreachable entry and
// compares below every feasible value.
inline constexpr int kInfeasible = -1;

// Boundary profile of a partial flow in block B after merging l children:
// b = flow on B_{x_0}, j1 = flow on B_{x_1..x_l}, j2 = flow on the cash node.
struct PEntryKey {
  int b = 0;
  int j1 = 0;
  int j2 = 0;
};

// Boundary profile of a child block's subtree solution: b = flow on its
// c(B) node, j = flow on its cash node.
struct SEntryKey {
  int b = 0;
  int j = 0;
};

// Maximum flow parked on B_{x_{l+1}..x_q} for each (b, j1, j2), after l
// children have been merged.
class PTable {
 public:
  PTable(BlockId block, int merged, int cash_capacity);

  BlockId block() const noexcept { return block_; }
  int merged() const noexcept { return merged_; }
  int cash_capacity() const noexcept { return cash_capacity_; }

  int get(PEntryKey e) const { return values_[index(e)]; }
  void set(PEntryKey e, int value) { values_[index(e)] = value; }
  void raise(PEntryKey e, int value) {
    int& slot = values_[index(e)];
    if (value > slot) slot = value;
  }

 private:
  std::size_t index(PEntryKey e) const;

  BlockId block_;
  int merged_;
  int cash_capacity_;
  std::vector<int> values_;
};

// Maximum flow on B_{x_1..x_q} of a subtree solution for each (b, j).
class STable {
 public:
  STable() = default;
  STable(BlockId block, int cash_capacity);

  BlockId block() const noexcept { return block_; }
  int cash_capacity() const noexcept { return cash_capacity_; }

  int get(SEntryKey e) const { return values_[index(e)]; }
  void set(SEntryKey e, int value) { values_[index(e)] = value; }

 private:
  std::size_t index(SEntryKey e) const;

  BlockId block_ = -1;
  int cash_capacity_ = 0;
  std::vector<int> values_;
};

// q = number of block vertices other than x_0; merged = children already
// folded into the P table (l).
struct MergeGeometry {
  int q = 0;
  int merged = 0;
};

// Merge when the child's cut vertex does not become a source. Returns the
// flow left for B_{x_{l+2..q}}, or nullopt when the two partial flows
// cannot produce the target profile.
std::optional<int> weak_combine(PEntryKey parent, int parent_rest, SEntryKey child, int child_rest,
                                PEntryKey target, MergeGeometry geometry);

// Merge when the child's cut vertex x_{l+1} becomes a new source.
// repeat_capacity = d_G(x_{l+1}) - k + 1, the capacity of the pair cash
// node; must be >= 0.
std::optional<int> strong_combine(PEntryKey parent, int parent_rest, SEntryKey child,
                                  int child_rest, PEntryKey target, MergeGeometry geometry,
                                  int repeat_capacity);

// Fault injection for the self-check harness.
enum class Mutation {
  kNone,
  kWeakValueOffByOne,  // weak merges report one unit too many
};

struct SolveContext {
  int k = 0;
  const RootedBlockTree* tree = nullptr;
  Mutation mutation = Mutation::kNone;

  int q(BlockId b) const;
};

PTable base_p_table(BlockId block, const SolveContext& ctx);
PTable combine_child(const PTable& p, const STable& child, const SolveContext& ctx);
STable finalize_s_table(const PTable& p, const SolveContext& ctx);

// Optional per-block dump of every feasible table entry, in post-order.
struct DpTrace {
  std::vector<std::string> lines;
  std::string text() const;
};

// Largest |W| among sets that realize |W| distinct colors in some proper
// k-coloring, i.e. max_j (j + S_root(0, j)). Requires k > omega.
int max_basis_size(const RootedBlockTree& tree, int k, Mutation mutation = Mutation::kNone,
                   DpTrace* trace = nullptr);

struct SolveOptions {
  std::optional<BlockId> root;
  std::optional<std::uint64_t> child_order_seed;
  Mutation mutation = Mutation::kNone;
  DpTrace* trace = nullptr;
};

RootedBlockTree solver_tree(const BlockGraph& g, const SolveOptions& options);

// Does g have a b-coloring with exactly k colors? Throws PreconditionError
// for k < 1.
bool decide_k(const BlockGraph& g, int k, const SolveOptions& options = {});

struct KDecision {
  int k = 0;
  bool decision = false;
  double milliseconds = 0.0;
};

struct BChromaticResult {
  int value = 0;
  std::vector<KDecision> trace;  // k values tried, descending
};

// b(G): scans k downward from m(G) and stops at the first yes; k = omega
// always succeeds.
BChromaticResult b_chromatic_traced(const BlockGraph& g, const SolveOptions& options = {});
int b_chromatic(const BlockGraph& g, const SolveOptions& options = {});

}  // namespace bflow
