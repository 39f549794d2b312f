#include "bflow/dp_solver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bflow/degree.hpp"
#include "bflow/error.hpp"

namespace bflow {

PTable::PTable(BlockId block, int merged, int cash_capacity)
    : block_(block),
      merged_(merged),
      cash_capacity_(cash_capacity),
      values_(static_cast<std::size_t>(2 * (merged + 1) * (cash_capacity + 1)), kInfeasible) {}

std::size_t PTable::index(PEntryKey e) const {
  return static_cast<std::size_t>((e.b * (merged_ + 1) + e.j1) * (cash_capacity_ + 1) + e.j2);
}

STable::STable(BlockId block, int cash_capacity)
    : block_(block),
      cash_capacity_(cash_capacity),
      values_(static_cast<std::size_t>(2 * (cash_capacity + 1)), kInfeasible) {}

std::size_t STable::index(SEntryKey e) const {
  return static_cast<std::size_t>(e.b * (cash_capacity_ + 1) + e.j);
}

std::optional<int> weak_combine(PEntryKey parent, int parent_rest, SEntryKey child, int child_rest,
                                PEntryKey target, MergeGeometry geometry) {
  const int lack_x0 = target.b - parent.b;
  const int lack_cash = target.j2 - parent.j2;
  if (lack_x0 < 0 || lack_cash < 0) return std::nullopt;
  const int free_nodes = geometry.q - geometry.merged - 1;
  // Everything the child holds off its cut vertex can be routed through
  // the pair cash node to any parent node except B_{x_{l+1}}.
  const int supply = child_rest + child.j;

  std::optional<int> best;
  // B_{x_{l+1}} is filled by the child's c(B) unit, by one of the parent's
  // parked units, or left empty.
  auto consider = [&](int occupied, int parked_used) {
    const int lack_cuts = target.j1 - parent.j1 - occupied;
    if (lack_cuts < 0 || lack_cuts > geometry.merged - parent.j1) return;
    if (parked_used > parent_rest) return;
    const int lacks = lack_x0 + lack_cuts + lack_cash;
    if (supply < lacks) return;
    const int value = std::min(free_nodes, parent_rest - parked_used + supply - lacks);
    if (!best || value > *best) best = value;
  };
  if (child.b == 1) {
    consider(1, 0);
  } else {
    consider(0, 0);
    consider(1, 1);
  }
  return best;
}

std::optional<int> strong_combine(PEntryKey parent, int parent_rest, SEntryKey child,
                                  int child_rest, PEntryKey target, MergeGeometry geometry,
                                  int repeat_capacity) {
  if (child.b != 0 || repeat_capacity < 0) return std::nullopt;
  const int lack_x0 = target.b - parent.b;
  const int lack_cuts = target.j1 - (parent.j1 + 1);  // the new source sits on B_{x_{l+1}}
  const int lack_cash = target.j2 - parent.j2;
  if (lack_x0 < 0 || lack_cuts < 0 || lack_cash < 0) return std::nullopt;
  const int free_nodes = geometry.q - geometry.merged - 1;

  std::optional<int> best;
  // through_pair: units sent from the child's vertex nodes via the pair
  // cash node towards B_{x_0..x_l}; the child's cash units can reach any
  // parent vertex node but not the parent cash node.
  for (int through_pair = 0; through_pair <= repeat_capacity; ++through_pair) {
    if (lack_x0 + lack_cuts > child.j + through_pair) continue;
    if (lack_cash > child_rest - through_pair) continue;
    const int extra = std::min(child_rest - through_pair - lack_cash, repeat_capacity - through_pair);
    const int value = std::min(
        free_nodes, parent_rest + child.j + through_pair + extra - lack_x0 - lack_cuts);
    if (!best || value > *best) best = value;
  }
  return best;
}

int SolveContext::q(BlockId b) const {
  return tree->block_size(b) - (tree->is_root(b) ? 0 : 1);
}

PTable base_p_table(BlockId block, const SolveContext& ctx) {
  // Only the block itself is present and it holds no source.
  PTable p(block, 0, ctx.k - ctx.tree->block_size(block));
  p.set({0, 0, 0}, 0);
  return p;
}

PTable combine_child(const PTable& p, const STable& child, const SolveContext& ctx) {
  const RootedBlockTree& tree = *ctx.tree;
  const BlockId block = p.block();
  const RootedBlock& node = tree.node(block);
  const int merged = p.merged();
  const ChildLink& link = node.children.at(merged);
  const int cash = p.cash_capacity();
  const int child_cash = child.cash_capacity();
  const int max_b = tree.is_root(block) ? 0 : 1;
  const MergeGeometry geometry{ctx.q(block), merged};
  const int repeat_capacity = tree.degree(link.cut) - ctx.k + 1;

  PTable out(block, merged + 1, cash);
  for (int b1 = 0; b1 <= max_b; ++b1) {
    for (int j11 = 0; j11 <= merged; ++j11) {
      for (int j21 = 0; j21 <= cash; ++j21) {
        const PEntryKey e1{b1, j11, j21};
        const int w1 = p.get(e1);
        if (w1 == kInfeasible) continue;
        for (int b2 = 0; b2 <= 1; ++b2) {
          for (int j = 0; j <= child_cash; ++j) {
            const SEntryKey e2{b2, j};
            const int w2 = child.get(e2);
            if (w2 == kInfeasible) continue;
            // No merge can fill more than the child's whole supply.
            const int supply = w2 + j;
            const int j1_hi = std::min(merged + 1, j11 + 1 + supply);
            const int j2_hi = std::min(cash, j21 + supply);
            for (int bt = b1; bt <= max_b; ++bt) {
              for (int j1t = j11; j1t <= j1_hi; ++j1t) {
                for (int j2t = j21; j2t <= j2_hi; ++j2t) {
                  const PEntryKey target{bt, j1t, j2t};
                  std::optional<int> v = weak_combine(e1, w1, e2, w2, target, geometry);
                  if (v && ctx.mutation == Mutation::kWeakValueOffByOne) *v += 1;
                  if (repeat_capacity >= 0 && b2 == 0) {
                    auto s = strong_combine(e1, w1, e2, w2, target, geometry, repeat_capacity);
                    if (s && (!v || *s > *v)) v = s;
                  }
                  if (v) out.raise(target, *v);
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

STable finalize_s_table(const PTable& p, const SolveContext& ctx) {
  STable s(p.block(), p.cash_capacity());
  const int max_b = ctx.tree->is_root(p.block()) ? 0 : 1;
  for (int b = 0; b <= max_b; ++b) {
    for (int j = 0; j <= p.cash_capacity(); ++j) {
      int best = kInfeasible;
      for (int j1 = 0; j1 <= p.merged(); ++j1) {
        const int w = p.get({b, j1, j});
        if (w != kInfeasible) best = std::max(best, w + j1);
      }
      s.set({b, j}, best);
    }
  }
  return s;
}

std::string DpTrace::text() const {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

void trace_tables(DpTrace& trace, const PTable& p, const STable& s) {
  for (int b = 0; b <= 1; ++b) {
    for (int j1 = 0; j1 <= p.merged(); ++j1) {
      for (int j2 = 0; j2 <= p.cash_capacity(); ++j2) {
        const int v = p.get({b, j1, j2});
        if (v == kInfeasible) continue;
        std::ostringstream line;
        line << "block " << p.block() << ", entry (" << b << ',' << j1 << ',' << j2 << ") = " << v;
        trace.lines.push_back(line.str());
      }
    }
  }
  for (int b = 0; b <= 1; ++b) {
    for (int j = 0; j <= s.cash_capacity(); ++j) {
      const int v = s.get({b, j});
      if (v == kInfeasible) continue;
      std::ostringstream line;
      line << "block " << s.block() << ", S(" << b << ',' << j << ") = " << v;
      trace.lines.push_back(line.str());
    }
  }
}

}  // namespace

int max_basis_size(const RootedBlockTree& tree, int k, Mutation mutation, DpTrace* trace) {
  if (k <= tree.omega()) {
    throw PreconditionError("dynamic program needs k > omega (k=" + std::to_string(k) +
                            ", omega=" + std::to_string(tree.omega()) + ")");
  }
  const SolveContext ctx{k, &tree, mutation};
  std::vector<STable> solved(tree.block_count());
  for (BlockId b : tree.post_order()) {
    PTable p = base_p_table(b, ctx);
    for (const ChildLink& c : tree.node(b).children) p = combine_child(p, solved[c.block], ctx);
    solved[b] = finalize_s_table(p, ctx);
    if (trace) trace_tables(*trace, p, solved[b]);
    // Children are no longer needed once folded into their parent.
    for (const ChildLink& c : tree.node(b).children) solved[c.block] = STable();
  }
  const STable& root = solved[tree.root()];
  int best = 0;
  for (int j = 0; j <= root.cash_capacity(); ++j) {
    const int v = root.get({0, j});
    if (v != kInfeasible) best = std::max(best, j + v);
  }
  return best;
}

RootedBlockTree solver_tree(const BlockGraph& g, const SolveOptions& options) {
  RootedBlockTree tree = root_decomposition(g.blocks(), options.root.value_or(0));
  if (options.child_order_seed) tree = shuffle_children(tree, *options.child_order_seed);
  return tree;
}

namespace {

void check_root(const BlockGraph& g, const SolveOptions& options) {
  if (options.root && (*options.root < 0 || *options.root >= g.blocks().block_count())) {
    throw PreconditionError("root block " + std::to_string(*options.root) + " does not exist");
  }
}

// Shortcut answers that need no table work; nullopt means run the program.
std::optional<bool> decide_trivially(const BlockGraph& g, int k, int m) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (k < g.omega()) return false;  // no proper k-coloring
  if (k == g.omega()) return true;  // chordal: chi = omega, and any chi-coloring is a b-coloring
  if (k > m) return false;
  if (static_cast<int>(dense_vertices(g.graph(), k).size()) < k) return false;
  return std::nullopt;
}

}  // namespace

bool decide_k(const BlockGraph& g, int k, const SolveOptions& options) {
  check_root(g, options);
  if (auto quick = decide_trivially(g, k, m_degree(g.graph()))) return *quick;
  RootedBlockTree tree = solver_tree(g, options);
  return max_basis_size(tree, k, options.mutation, options.trace) >= k;
}

BChromaticResult b_chromatic_traced(const BlockGraph& g, const SolveOptions& options) {
  using Clock = std::chrono::steady_clock;
  check_root(g, options);
  const int m = m_degree(g.graph());
  const RootedBlockTree tree = solver_tree(g, options);
  BChromaticResult result;
  for (int k = m; k >= g.omega(); --k) {
    const auto start = Clock::now();
    bool yes = false;
    if (auto quick = decide_trivially(g, k, m)) {
      yes = *quick;
    } else {
      yes = max_basis_size(tree, k, options.mutation, options.trace) >= k;
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    result.trace.push_back({k, yes, ms});
    if (yes) {
      result.value = k;
      break;
    }
  }
  return result;
}

int b_chromatic(const BlockGraph& g, const SolveOptions& options) {
  return b_chromatic_traced(g, options).value;
}

}  // namespace bflow
