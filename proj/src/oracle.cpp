#include "bflow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "bflow/degree.hpp"
#include "bflow/error.hpp"
#include "bflow/flow_network.hpp"

namespace bflow {

namespace {

using ColorMask = std::uint64_t;

constexpr int kMaxOracleColors = 63;

ColorMask bit(int color) { return ColorMask{1} << color; }

ColorMask all_colors(int k) {
  ColorMask m = 0;
  for (int c = 1; c <= k; ++c) m |= bit(c);
  return m;
}

ColorMask neighbor_colors(const SimpleGraph& g, const std::vector<int>& colors, Vertex v) {
  ColorMask m = 0;
  for (Vertex u : g.neighbors(v)) {
    if (colors[u] > 0) m |= bit(colors[u]);
  }
  return m;
}

void check_k(int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (k > kMaxOracleColors) throw PreconditionError("oracle supports at most 63 colors");
}

std::vector<Vertex> bfs_order(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<Vertex> frontier;
    frontier.push(s);
    seen[s] = 1;
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          frontier.push(u);
        }
      }
    }
  }
  return order;
}

class MaxRealizedSearch {
 public:
  MaxRealizedSearch(const SimpleGraph& g, int k, const OracleOptions& options)
      : g_(g), k_(k), options_(options), full_(all_colors(k)), order_(bfs_order(g)),
        colors_(g.vertex_count(), 0) {}

  MaxRealizedResult run() {
    descend(0, 0);
    result_.nodes = nodes_;
    return result_;
  }

 private:
  void descend(std::size_t pos, int used_max) {
    if (++nodes_ > options_.budget) throw BudgetExceeded(options_.budget);
    if (pos == order_.size()) {
      evaluate();
      return;
    }
    const Vertex v = order_[pos];
    const ColorMask forbidden = neighbor_colors(g_, colors_, v);
    // First occurrences of colors appear in increasing order.
    const int limit = options_.symmetry_pruning ? std::min(k_, used_max + 1) : k_;
    for (int c = 1; c <= limit && !done_; ++c) {
      if (forbidden & bit(c)) continue;
      colors_[v] = c;
      descend(pos + 1, std::max(used_max, c));
      colors_[v] = 0;
    }
  }

  void evaluate() {
    ColorMask realized = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if ((neighbor_colors(g_, colors_, v) | bit(colors_[v])) == full_) realized |= bit(colors_[v]);
    }
    const int count = std::popcount(realized);
    if (!result_.witness || count > result_.value) {
      result_.value = count;
      result_.witness = Coloring{k_, colors_};
      if (count == k_) done_ = true;
    }
  }

  const SimpleGraph& g_;
  int k_;
  OracleOptions options_;
  ColorMask full_;
  std::vector<Vertex> order_;
  std::vector<int> colors_;
  long long nodes_ = 0;
  bool done_ = false;
  MaxRealizedResult result_;
};

class RealizingSearch {
 public:
  RealizingSearch(const SimpleGraph& g, std::span<const Vertex> w, int k,
                  const OracleOptions& options)
      : g_(g), w_(w.begin(), w.end()), k_(k), options_(options), colors_(g.vertex_count(), 0) {}

  bool run() {
    for (std::size_t i = 0; i < w_.size(); ++i) colors_[w_[i]] = static_cast<int>(i) + 1;
    colored_ = static_cast<int>(w_.size());
    if (!promising()) return false;
    return descend(static_cast<int>(w_.size()));
  }

 private:
  // Every basis vertex must still be able to see all k - 1 other colors.
  bool promising() const {
    for (Vertex w : w_) {
      int uncolored = 0;
      for (Vertex u : g_.neighbors(w)) uncolored += colors_[u] == 0;
      const int missing = k_ - 1 - std::popcount(neighbor_colors(g_, colors_, w));
      if (uncolored < missing) return false;
    }
    return true;
  }

  Vertex most_constrained() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (colors_[v] != 0) continue;
      const int sat = std::popcount(neighbor_colors(g_, colors_, v));
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool descend(int free_max) {
    if (++nodes_ > options_.budget) throw BudgetExceeded(options_.budget);
    if (colored_ == g_.vertex_count()) return true;
    const Vertex v = most_constrained();
    const ColorMask forbidden = neighbor_colors(g_, colors_, v);
    // Colors above |W| are interchangeable; open them one at a time.
    const int limit = options_.symmetry_pruning ? std::min(k_, free_max + 1) : k_;
    for (int c = 1; c <= limit; ++c) {
      if (forbidden & bit(c)) continue;
      colors_[v] = c;
      ++colored_;
      if (promising() && descend(std::max(free_max, c))) return true;
      --colored_;
      colors_[v] = 0;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<Vertex> w_;
  int k_;
  OracleOptions options_;
  std::vector<int> colors_;
  int colored_ = 0;
  long long nodes_ = 0;
};

}  // namespace

bool Coloring::complete() const {
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c > 0; });
}

bool Coloring::proper(const SimpleGraph& g) const {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (int c : colors) {
    if (c < 1 || c > k) return false;
  }
  for (const Edge& e : g.edges()) {
    if (colors[e.u] == colors[e.v]) return false;
  }
  return true;
}

RealizationReport realization(const SimpleGraph& g, const Coloring& c) {
  check_k(c.k);
  RealizationReport report;
  report.realizing_vertex.assign(c.k, -1);
  const ColorMask full = all_colors(c.k);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int own = c.colors.at(v);
    if (own < 1 || own > c.k) continue;
    if (report.realizing_vertex[own - 1] >= 0) continue;
    if ((neighbor_colors(g, c.colors, v) | bit(own)) == full) report.realizing_vertex[own - 1] = v;
  }
  for (int color = 1; color <= c.k; ++color) {
    if (report.realizing_vertex[color - 1] >= 0) report.realized_colors.push_back(color);
  }
  return report;
}

bool verify_b_coloring(const SimpleGraph& g, const Coloring& c) {
  if (c.k < 1 || c.k > kMaxOracleColors || !c.proper(g)) return false;
  std::vector<char> used(c.k + 1, 0);
  for (int color : c.colors) used[color] = 1;
  if (std::count(used.begin() + 1, used.end(), 1) != c.k) return false;
  return static_cast<int>(realization(g, c).realized_colors.size()) == c.k;
}

MaxRealizedResult search_max_realized(const SimpleGraph& g, int k, const OracleOptions& options) {
  check_k(k);
  return MaxRealizedSearch(g, k, options).run();
}

int max_realized_colors(const SimpleGraph& g, int k, const OracleOptions& options) {
  return search_max_realized(g, k, options).value;
}

bool exists_coloring_realizing(const SimpleGraph& g, std::span<const Vertex> w, int k,
                               const OracleOptions& options) {
  check_k(k);
  std::vector<char> in_w(g.vertex_count(), 0);
  for (Vertex x : w) {
    if (x < 0 || x >= g.vertex_count()) throw PreconditionError("vertex in W out of range");
    if (in_w[x]) throw PreconditionError("vertex " + std::to_string(x) + " repeated in W");
    if (g.degree(x) < k - 1) {
      throw PreconditionError("vertex " + std::to_string(x) + " is not " + std::to_string(k) +
                              "-dense");
    }
    in_w[x] = 1;
  }
  if (static_cast<int>(w.size()) > k) return false;
  return RealizingSearch(g, w, k, options).run();
}

EquivalenceReport cross_check_equivalence(const BlockGraph& g, int k, int size_cap,
                                    const OracleOptions& options, std::optional<BlockId> root) {
  const RootedBlockTree tree = root_decomposition(g.blocks(), root.value_or(0));
  const std::vector<Vertex> dense = dense_vertices(g.graph(), k);
  if (dense.size() > 24) throw PreconditionError("too many k-dense vertices for subset enumeration");
  if (k <= g.omega()) throw PreconditionError("cross-check needs k > omega");

  EquivalenceReport report;
  const int cap = std::min(k, size_cap);
  const std::uint32_t subsets = std::uint32_t{1} << dense.size();
  std::vector<char> feasible(subsets, 0);
  std::vector<Vertex> w;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) > cap) continue;
    w.clear();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) w.push_back(dense[i]);
    }
    const bool by_flow = is_flow_feasible(tree, w, k);
    const bool by_coloring = exists_coloring_realizing(g.graph(), w, k, options);
    ++report.subsets_checked;
    feasible[mask] = by_flow;
    if (by_flow != by_coloring) ++report.mismatches;
    if (by_flow != by_coloring && report.passed) {
      report.passed = false;
      report.counterexample = w;
      report.flow_answer = by_flow;
      report.oracle_answer = by_coloring;
    }
    if (!by_flow) continue;
    ++report.feasible;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      const std::uint32_t b = std::uint32_t{1} << i;
      if ((mask & b) && !feasible[mask ^ b]) {
        ++report.subflow_violations;
        if (report.passed) {
          report.passed = false;
          report.counterexample = w;
          report.flow_answer = by_flow;
          report.oracle_answer = by_coloring;
        }
      }
    }
  }
  return report;
}

}  // namespace bflow
