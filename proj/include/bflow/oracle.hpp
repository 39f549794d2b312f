#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bflow/blocks.hpp"
#include "bflow/graph.hpp"

namespace bflow {

// Exhaustive search procedures used as ground truth on small graphs.

// colors[v] in [1, k]; 0 marks an uncolored vertex.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  bool complete() const;
  bool proper(const SimpleGraph& g) const;
};

struct RealizationReport {
  std::vector<int> realized_colors;   // ascending
  std::vector<Vertex> realizing_vertex;  // [color - 1], -1 if unrealized
};

// A vertex realizes its color when its neighborhood sees every other color.
RealizationReport realization(const SimpleGraph& g, const Coloring& c);

// Proper, exactly k nonempty classes, every color realized.
bool verify_b_coloring(const SimpleGraph& g, const Coloring& c);

struct OracleOptions {
  long long budget = 100'000'000;  // branch nodes
  bool symmetry_pruning = true;
};

struct MaxRealizedResult {
  int value = 0;
  std::optional<Coloring> witness;  // a proper k-coloring attaining value
  long long nodes = 0;
};

// Maximum number of realized colors over all proper k-colorings; equals k
// iff g has a b-coloring with k colors. Throws BudgetExceeded.
MaxRealizedResult search_max_realized(const SimpleGraph& g, int k, const OracleOptions& options = {});
int max_realized_colors(const SimpleGraph& g, int k, const OracleOptions& options = {});

// Is there a proper k-coloring in which the vertices of W get pairwise
// distinct colors and each realizes its own? W must be k-dense
// (PreconditionError otherwise). Throws BudgetExceeded.
bool exists_coloring_realizing(const SimpleGraph& g, std::span<const Vertex> w, int k,
                               const OracleOptions& options = {});

struct EquivalenceReport {
  bool passed = true;
  int subsets_checked = 0;
  int feasible = 0;
  int mismatches = 0;  // sets where the two answers differ
  int subflow_violations = 0;
  std::vector<Vertex> counterexample;  // first disagreeing W
  bool flow_answer = false;
  bool oracle_answer = false;
};

// For every W among the k-dense vertices with |W| <= min(k, size_cap),
// compares the flow-network feasibility test against the coloring search,
// and checks that every feasible W stays feasible after dropping any one
// vertex. Requires k > omega.
EquivalenceReport cross_check_equivalence(const BlockGraph& g, int k, int size_cap,
                                    const OracleOptions& options = {},
                                    std::optional<BlockId> root = std::nullopt);

}  // namespace bflow
