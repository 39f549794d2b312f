// bflow: b-colorings of claw-free block graphs from the command line.
//
// Exit codes: 0 yes / success, 1 no / failed check, 2 input or usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bflow/blocks.hpp"
#include "bflow/degree.hpp"
#include "bflow/dp_solver.hpp"
#include "bflow/error.hpp"
#include "bflow/generators.hpp"
#include "bflow/graph.hpp"
#include "bflow/oracle.hpp"
#include "bflow/report.hpp"
#include "selfcheck.hpp"

namespace {

using namespace bflow;
using Json = nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputArgs {
  std::string tree;
  std::string graph;
  bool human = false;
};

void add_input_options(CLI::App* cmd, InputArgs& in) {
  auto* tree = cmd->add_option("--tree", in.tree, "Edge list of a tree; its line graph is solved");
  auto* graph = cmd->add_option("--graph", in.graph, "Edge list of a claw-free block graph");
  tree->excludes(graph);
  graph->excludes(tree);
  cmd->add_flag("--human", in.human, "Plain-text output instead of JSON");
}

struct LoadedInput {
  BlockGraph graph;
  InputDescriptor descriptor;
};

SimpleGraph read_input(const std::string& path) {
  if (path != "-") return read_graph_file(path);
  std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

LoadedInput load(const InputArgs& in) {
  if (in.tree.empty() == in.graph.empty()) throw UsageError("exactly one of --tree or --graph is required");
  const bool is_tree = !in.tree.empty();
  const std::string& path = is_tree ? in.tree : in.graph;
  SimpleGraph raw = read_input(path);
  BlockGraph g = is_tree ? BlockGraph::from_tree(Tree::from_graph(std::move(raw)))
                         : BlockGraph::validate(std::move(raw));
  InputDescriptor d{path, is_tree ? "tree" : "graph", g.graph().vertex_count(), g.graph().edge_count()};
  return {std::move(g), d};
}

SolveReport base_report(const LoadedInput& in, const std::string& mode) {
  SolveReport r;
  r.input = in.descriptor;
  r.omega = in.graph.omega();
  r.m_degree = m_degree(in.graph.graph());
  r.mode = mode;
  return r;
}

void emit(const SolveReport& r, bool human) {
  if (human) {
    std::cout << to_text(r);
  } else {
    std::cout << to_json(r).dump(2) << '\n';
  }
}

OracleOptions oracle_options() {
  OracleOptions o;
  if (const char* env = std::getenv("BFLOW_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long budget = std::stoll(env, &used);
      if (used != std::string(env).size() || budget <= 0) throw std::invalid_argument(env);
      o.budget = budget;
    } catch (const std::exception&) {
      throw UsageError(std::string("BFLOW_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return o;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad vertex '" + item + "' in --W");
    out.push_back(v);
  }
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- decide

struct DecideArgs {
  InputArgs in;
  int k = 0;
  std::optional<int> root;
  bool trace = false;
};

int cmd_decide(const DecideArgs& a) {
  LoadedInput in = load(a.in);
  SolveReport r = base_report(in, "decide");
  r.k = a.k;
  DpTrace trace;
  SolveOptions opt;
  opt.root = a.root;
  if (a.trace) opt.trace = &trace;
  const auto start = std::chrono::steady_clock::now();
  const bool yes = decide_k(in.graph, a.k, opt);
  r.answer = yes;
  if (a.trace) {
    r.per_k.push_back({a.k, yes, millis_since(start)});
    std::cerr << trace.text();
  }
  emit(r, a.in.human);
  return yes ? kYes : kNo;
}

// --------------------------------------------------------------- bnumber

struct BNumberArgs {
  InputArgs in;
  std::optional<int> root;
  bool with_oracle = false;
};

int cmd_bnumber(const BNumberArgs& a) {
  LoadedInput in = load(a.in);
  SolveReport r = base_report(in, "bnumber");
  SolveOptions opt;
  opt.root = a.root;
  const BChromaticResult b = b_chromatic_traced(in.graph, opt);
  r.answer = b.value;
  for (const KDecision& d : b.trace) r.per_k.push_back({d.k, d.decision, d.milliseconds});
  if (a.with_oracle) {
    const OracleOptions oracle = oracle_options();
    for (int k = r.omega; k <= r.m_degree; ++k) {
      const bool solver = decide_k(in.graph, k, opt);
      const int realized = max_realized_colors(in.graph.graph(), k, oracle);
      r.checks.push_back({"oracle k=" + std::to_string(k), solver == (realized == k),
                          std::string("solver ") + (solver ? "yes" : "no") + ", oracle realizes " +
                              std::to_string(realized) + " of " + std::to_string(k)});
    }
  }
  emit(r, a.in.human);
  for (const NamedCheck& c : r.checks) {
    if (!c.passed) return kNo;
  }
  return kYes;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  InputArgs in;
  int k = 0;
  std::optional<std::string> w;
};

int cmd_oracle(const OracleArgs& a) {
  LoadedInput in = load(a.in);
  SolveReport r = base_report(in, "oracle");
  r.k = a.k;
  if (a.k < 1) throw PreconditionError("k must be at least 1");
  const OracleOptions options = oracle_options();
  bool yes = false;
  if (a.w) {
    const std::vector<Vertex> w = parse_vertex_list(*a.w);
    for (Vertex v : w) {
      if (v < 0 || v >= in.graph.graph().vertex_count()) {
        throw PreconditionError("vertex " + std::to_string(v) + " in --W is out of range");
      }
    }
    yes = exists_coloring_realizing(in.graph.graph(), w, a.k, options);
    r.answer = yes;
    r.checks.push_back({"W realizes distinct colors", yes, "|W|=" + std::to_string(w.size())});
  } else {
    const MaxRealizedResult res = search_max_realized(in.graph.graph(), a.k, options);
    yes = res.value == a.k;
    r.answer = res.value;
    std::string detail = std::to_string(res.nodes) + " search nodes";
    if (yes && res.witness) {
      detail += "; witness";
      for (int c : res.witness->colors) detail += ' ' + std::to_string(c);
    }
    r.checks.push_back({"b-coloring with k colors", yes, detail});
  }
  emit(r, a.in.human);
  return yes ? kYes : kNo;
}

// ------------------------------------------------------------ crosscheck

struct CrossArgs {
  InputArgs in;
  int k = 0;
  int cap = 4;
  std::optional<int> root;
};

int cmd_crosscheck(const CrossArgs& a) {
  LoadedInput in = load(a.in);
  SolveReport r = base_report(in, "crosscheck");
  r.k = a.k;
  const EquivalenceReport t = cross_check_equivalence(in.graph, a.k, a.cap, oracle_options(), a.root);
  const bool equivalent = t.mismatches == 0;
  std::string eq_detail = std::to_string(t.subsets_checked) + " source sets, " + std::to_string(t.mismatches) + " disagreements";
  if (!t.passed) {
    eq_detail += "; first counterexample W={";
    for (std::size_t i = 0; i < t.counterexample.size(); ++i) {
      eq_detail += (i ? "," : "") + std::to_string(t.counterexample[i]);
    }
    eq_detail += std::string("} flow=") + (t.flow_answer ? "yes" : "no") +
                 " oracle=" + (t.oracle_answer ? "yes" : "no");
  }
  r.checks.push_back({"flow/coloring equivalence", equivalent, eq_detail});
  r.checks.push_back({"subflow closure", t.subflow_violations == 0,
                      std::to_string(t.feasible) + " feasible sets, " +
                          std::to_string(t.subflow_violations) + " violations"});
  r.answer = t.passed;
  emit(r, a.in.human);
  return t.passed ? kYes : kNo;
}

// ------------------------------------------------------------------- gen

struct GenArgs {
  std::optional<int> random_edges;
  std::vector<int> caterpillar;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& a) {
  if (a.random_edges.has_value() == !a.caterpillar.empty()) {
    throw UsageError("exactly one of --tree-random or --caterpillar is required");
  }
  Tree t = [&] {
    if (a.random_edges) {
      if (*a.random_edges < 1) throw UsageError("--tree-random needs N >= 1");
      return random_tree(*a.random_edges, a.seed);
    }
    const int n = a.caterpillar[0];
    const int spine = a.caterpillar[1];
    if (n < 1 || spine < 1 || spine > n + 1) throw UsageError("--caterpillar needs N >= 1 and 1 <= L <= N+1");
    return random_caterpillar(n, spine, a.seed);
  }();
  std::cout << to_edge_list(t.graph());
  return kYes;
}

// ------------------------------------------------------------- selfcheck

struct SelfcheckArgs {
  cli::SelfcheckOptions options;
  bool inject_mutation = false;
  bool human = false;
};

int cmd_selfcheck(SelfcheckArgs a) {
  if (a.inject_mutation) a.options.mutation = Mutation::kWeakValueOffByOne;
  a.options.budget = oracle_options().budget;
  const auto start = std::chrono::steady_clock::now();
  const cli::SelfcheckResult result = cli::run_selfcheck(a.options);
  const double ms = millis_since(start);
  if (a.human) {
    std::cout << "selfcheck over " << result.instances << " trees ("
              << (a.options.samples > 0 ? "sampled" : "exhaustive") << ", edges <= "
              << a.options.max_edges << ") in " << ms << " ms\n";
    for (const NamedCheck& c : result.checks) {
      std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << "  " << c.detail << '\n';
    }
  } else {
    Json j;
    j["mode"] = "selfcheck";
    j["max_edges"] = a.options.max_edges;
    j["samples"] = a.options.samples;
    j["seed"] = a.options.seed;
    j["mutation"] = a.inject_mutation;
    j["instances"] = result.instances;
    j["passed"] = result.passed();
    j["checks"] = Json::array();
    for (const NamedCheck& c : result.checks) {
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["ms"] = ms;
    std::cout << j.dump(2) << '\n';
  }
  return result.passed() ? kYes : kNo;
}

// ----------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<int> sizes;
  std::uint64_t seed = 2024;
  int repeats = 1;
  bool human = false;
};

int cmd_bench(const BenchArgs& a) {
  Json rows = Json::array();
  for (int edges : a.sizes) {
    if (edges < 1) throw UsageError("bench sizes must be >= 1");
    const BlockGraph g = BlockGraph::from_tree(random_tree(edges, a.seed));
    double best = 0.0;
    int b = 0;
    for (int r = 0; r < std::max(1, a.repeats); ++r) {
      const auto start = std::chrono::steady_clock::now();
      b = b_chromatic(g);
      const double ms = millis_since(start);
      best = r == 0 ? ms : std::min(best, ms);
    }
    rows.push_back({{"tree_edges", edges},
                    {"n", g.graph().vertex_count()},
                    {"m", g.graph().edge_count()},
                    {"omega", g.omega()},
                    {"m_degree", m_degree(g.graph())},
                    {"b", b},
                    {"ms", best}});
  }
  if (a.human) {
    std::printf("%10s %8s %6s %8s %4s %12s\n", "edges", "n", "omega", "m_degree", "b", "ms");
    for (const Json& row : rows) {
      std::printf("%10d %8d %6d %8d %4d %12.3f\n", row["tree_edges"].get<int>(), row["n"].get<int>(),
                  row["omega"].get<int>(), row["m_degree"].get<int>(), row["b"].get<int>(),
                  row["ms"].get<double>());
    }
  } else {
    Json j;
    j["mode"] = "bench";
    j["seed"] = a.seed;
    j["rows"] = rows;
    std::cout << j.dump(2) << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-colorings of claw-free block graphs (line graphs of trees)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  DecideArgs decide;
  auto* c_decide = app.add_subcommand("decide", "Is there a b-coloring with exactly k colors?");
  add_input_options(c_decide, decide.in);
  c_decide->add_option("--k", decide.k, "Number of colors")->required();
  c_decide->add_option("--root", decide.root, "Root block id (default 0)");
  c_decide->add_flag("--trace", decide.trace, "Time the decision and dump table entries to stderr");

  BNumberArgs bnumber;
  auto* c_bnumber = app.add_subcommand("bnumber", "Compute the b-chromatic number");
  add_input_options(c_bnumber, bnumber.in);
  c_bnumber->add_option("--root", bnumber.root, "Root block id (default 0)");
  c_bnumber->add_flag("--with-oracle", bnumber.with_oracle, "Confirm every k with exhaustive search");

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Exhaustive coloring search (small graphs only)");
  add_input_options(c_oracle, oracle.in);
  c_oracle->add_option("--k", oracle.k, "Number of colors")->required();
  c_oracle->add_option("--W", oracle.w, "Comma-separated vertices that must realize distinct colors");

  CrossArgs cross;
  auto* c_cross = app.add_subcommand("crosscheck", "Flow network feasibility vs exhaustive search");
  add_input_options(c_cross, cross.in);
  c_cross->add_option("--k", cross.k, "Number of colors (must exceed omega)")->required();
  c_cross->add_option("--cap", cross.cap, "Largest source set size to enumerate")->capture_default_str();
  c_cross->add_option("--root", cross.root, "Root block id (default 0)");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Print a random tree as an edge list");
  auto* o_random = c_gen->add_option("--tree-random", gen.random_edges, "Uniform random tree with N edges");
  auto* o_cat = c_gen->add_option("--caterpillar", gen.caterpillar, "Caterpillar with N edges and a spine of L vertices")
                    ->expected(2);
  o_random->excludes(o_cat);
  c_gen->add_option("--seed", gen.seed, "Random seed")->capture_default_str();

  SelfcheckArgs self;
  auto* c_self = app.add_subcommand("selfcheck", "Run every cross-check over small trees");
  c_self->add_option("--max-edges", self.options.max_edges, "Largest tree size")->capture_default_str();
  c_self->add_option("--samples", self.options.samples, "Random trees to draw (0 = every tree)")
      ->capture_default_str();
  c_self->add_option("--seed", self.options.seed, "Random seed")->capture_default_str();
  c_self->add_option("--jobs", self.options.jobs, "Worker threads")->capture_default_str();
  c_self->add_option("--cap", self.options.size_cap, "Source set size cap")->capture_default_str();
  c_self->add_flag("--inject-mutation", self.inject_mutation, "Break the table merge on purpose");
  c_self->add_flag("--human", self.human, "Plain-text output instead of JSON");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Time the b-chromatic number on random trees");
  c_bench->add_option("--sizes", bench.sizes, "Comma-separated tree sizes in edges")->delimiter(',');
  c_bench->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  c_bench->add_option("--repeats", bench.repeats, "Report the best of this many runs")->capture_default_str();
  c_bench->add_flag("--human", bench.human, "Plain-text table instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    if (c_decide->parsed()) return cmd_decide(decide);
    if (c_bnumber->parsed()) return cmd_bnumber(bnumber);
    if (c_oracle->parsed()) return cmd_oracle(oracle);
    if (c_cross->parsed()) return cmd_crosscheck(cross);
    if (c_gen->parsed()) return cmd_gen(gen);
    if (c_self->parsed()) return cmd_selfcheck(self);
    if (c_bench->parsed()) return cmd_bench(bench);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const InvalidGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise BFLOW_BUDGET)\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
