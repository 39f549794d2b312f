#include "selfcheck.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "bflow/degree.hpp"
#include "bflow/error.hpp"
#include "bflow/flow_network.hpp"
#include "bflow/generators.hpp"
#include "bflow/oracle.hpp"

namespace bflow::cli {

namespace {

enum Check { kOracle, kDpFlow, kEquivalence, kClosure, kIndependence, kCheckCount };

const char* const kCheckNames[kCheckCount] = {
    "oracle equivalence", "flow-checker equivalence", "flow/coloring equivalence",
    "subflow closure", "root and child-order independence",
};

struct Failure {
  int edges = 0;
  std::string detail;
};

struct InstanceOutcome {
  std::optional<Failure> failures[kCheckCount];
  int cases[kCheckCount] = {};
  int over_budget = 0;
};

std::string tree_text(const Tree& t) {
  std::ostringstream out;
  out << t.vertex_count() << ' ' << t.edge_count();
  for (const Edge& e : t.graph().edges()) out << "; " << e.u << ' ' << e.v;
  return out.str();
}

int max_degree(const SimpleGraph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

InstanceOutcome check_tree(const Tree& t, const SelfcheckOptions& opt, std::uint64_t shuffle_seed) {
  InstanceOutcome out;
  auto fail = [&](Check c, const std::string& what) {
    if (!out.failures[c]) out.failures[c] = Failure{t.edge_count(), "tree {" + tree_text(t) + "} " + what};
  };
  OracleOptions oracle;
  oracle.budget = opt.budget;
  SolveOptions solve;
  solve.mutation = opt.mutation;

  const BlockGraph g = BlockGraph::from_tree(t);
  const int omega = g.omega();
  const int m = m_degree(g.graph());
  const RootedBlockTree tree = root_decomposition(g.blocks(), 0);

  for (int k = omega; k <= m; ++k) {
    try {
      ++out.cases[kOracle];
      const bool dp = decide_k(g, k, solve);
      const bool brute = max_realized_colors(g.graph(), k, oracle) == k;
      if (dp != brute) {
        fail(kOracle, "k=" + std::to_string(k) + " solver=" + (dp ? "yes" : "no") +
                          " oracle=" + (brute ? "yes" : "no"));
      }
    } catch (const BudgetExceeded&) {
      ++out.over_budget;
    }
  }

  const int top = max_degree(g.graph()) + 1;
  for (int k = omega + 1; k <= top; ++k) {
    if (dense_vertices(g.graph(), k).size() > 20) continue;
    ++out.cases[kDpFlow];
    const int dp = max_basis_size(tree, k, opt.mutation);
    const int flow = max_feasible_source_set(tree, k);
    if (dp != flow) {
      fail(kDpFlow, "k=" + std::to_string(k) + " table=" + std::to_string(dp) +
                        " flow=" + std::to_string(flow));
    }
  }

  for (int k = omega + 1; k <= m; ++k) {
    try {
      const EquivalenceReport r = cross_check_equivalence(g, k, opt.size_cap, oracle);
      out.cases[kEquivalence] += r.subsets_checked;
      out.cases[kClosure] += r.feasible;
      std::string w;
      for (Vertex x : r.counterexample) w += (w.empty() ? "" : ",") + std::to_string(x);
      if (r.subflow_violations > 0) fail(kClosure, "k=" + std::to_string(k) + " W={" + w + "}");
      if (r.mismatches > 0) {
        fail(kEquivalence, "k=" + std::to_string(k) + " W={" + w + "} flow=" +
                            (r.flow_answer ? "yes" : "no") + " oracle=" + (r.oracle_answer ? "yes" : "no"));
      }
    } catch (const BudgetExceeded&) {
      ++out.over_budget;
    }
  }

  const int reference = b_chromatic(g, solve);
  std::mt19937_64 rng(shuffle_seed);
  for (BlockId root = 0; root < g.blocks().block_count(); ++root) {
    for (int s = 0; s < 3; ++s) {
      SolveOptions variant = solve;
      variant.root = root;
      if (s > 0) variant.child_order_seed = rng();
      ++out.cases[kIndependence];
      const int b = b_chromatic(g, variant);
      if (b != reference) {
        fail(kIndependence, "root=" + std::to_string(root) + (s > 0 ? " shuffled" : "") +
                                " b=" + std::to_string(b) + " vs " + std::to_string(reference));
      }
    }
  }
  return out;
}

std::vector<Tree> instances(const SelfcheckOptions& opt) {
  std::vector<Tree> trees;
  if (opt.samples <= 0) {
    for (int e = 1; e <= opt.max_edges; ++e) {
      for (Tree& t : all_trees(e)) trees.push_back(std::move(t));
    }
    return trees;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> size(1, std::max(1, opt.max_edges));
  for (int i = 0; i < opt.samples; ++i) {
    const int edges = size(rng);
    trees.push_back(random_tree(edges, rng()));
  }
  return trees;
}

}  // namespace

bool SelfcheckResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

SelfcheckResult run_selfcheck(const SelfcheckOptions& options) {
  const std::vector<Tree> trees = instances(options);
  std::vector<InstanceOutcome> outcomes(trees.size());
  const int jobs = std::clamp(options.jobs, 1, 64);
  auto worker = [&](int id) {
    for (std::size_t i = static_cast<std::size_t>(id); i < trees.size(); i += static_cast<std::size_t>(jobs)) {
      outcomes[i] = check_tree(trees[i], options, options.seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
  }

  SelfcheckResult result;
  result.instances = static_cast<int>(trees.size());
  int over_budget = 0;
  for (const InstanceOutcome& o : outcomes) over_budget += o.over_budget;
  for (int c = 0; c < kCheckCount; ++c) {
    long cases = 0;
    int failed = 0;
    std::optional<Failure> smallest;
    for (const InstanceOutcome& o : outcomes) {
      cases += o.cases[c];
      if (!o.failures[c]) continue;
      ++failed;
      if (!smallest || o.failures[c]->edges < smallest->edges) smallest = o.failures[c];
    }
    std::string detail = std::to_string(cases) + " cases";
    if (failed > 0) {
      detail += ", " + std::to_string(failed) + " failing trees; smallest: " + smallest->detail;
    }
    result.checks.push_back({kCheckNames[c], failed == 0, detail});
  }
  result.checks.push_back({"oracle budget", true,
                           std::to_string(over_budget) + " cases skipped after exceeding the budget"});
  return result;
}

}  // namespace bflow::cli
