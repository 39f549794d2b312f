#include "bflow/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "bflow/error.hpp"

namespace bflow {

namespace {

Tree tree_from_edges(int n, const std::vector<Edge>& edges) {
  return Tree::from_graph(SimpleGraph::from_edges(n, edges));
}

std::vector<Edge> decode_prufer(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

// AHU encoding of the subtree hanging from v.
std::string encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> parts;
  for (int u : adj[v]) {
    if (u != parent) parts.push_back(encode(adj, u, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ')';
  return out;
}

std::string canonical_form(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) return std::string(static_cast<std::size_t>(n), '.');
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int u : adj[leaf]) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int center : layer) {
    std::string e = encode(adj, center, -1);
    if (best.empty() || e < best) best = e;
  }
  return best;
}

}  // namespace

Tree random_tree(int edges, std::uint64_t seed) {
  if (edges < 1) throw std::invalid_argument("random tree needs at least one edge");
  const int n = edges + 1;
  if (n == 2) return tree_from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return tree_from_edges(n, decode_prufer(seq, n));
}

Tree random_caterpillar(int edges, int spine, std::uint64_t seed) {
  if (edges < 1) throw std::invalid_argument("caterpillar needs at least one edge");
  if (spine < 1 || spine > edges + 1) throw std::invalid_argument("spine length out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> out;
  for (int v = 0; v + 1 < spine; ++v) out.push_back({v, v + 1});
  std::uniform_int_distribution<int> pick(0, spine - 1);
  int next = spine;
  while (static_cast<int>(out.size()) < edges) out.push_back({pick(rng), next++});
  return tree_from_edges(edges + 1, out);
}

std::vector<Tree> all_trees(int edges) {
  if (edges < 0) throw std::invalid_argument("negative edge count");
  using Adjacency = std::vector<std::vector<int>>;
  std::map<std::string, Adjacency> level{{canonical_form(Adjacency(1)), Adjacency(1)}};
  for (int e = 1; e <= edges; ++e) {
    std::map<std::string, Adjacency> grown;
    for (const auto& [key, adj] : level) {
      const int n = static_cast<int>(adj.size());
      for (int v = 0; v < n; ++v) {
        Adjacency next = adj;
        next.emplace_back();
        next[v].push_back(n);
        next[n].push_back(v);
        grown.try_emplace(canonical_form(next), std::move(next));
      }
    }
    level = std::move(grown);
  }
  std::vector<Tree> trees;
  trees.reserve(level.size());
  for (const auto& [key, adj] : level) {
    std::vector<Edge> es;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      for (int u : adj[v]) {
        if (v < u) es.push_back({v, u});
      }
    }
    trees.push_back(tree_from_edges(static_cast<int>(adj.size()), es));
  }
  return trees;
}

Tree star(int edges) {
  std::vector<Edge> es;
  for (int i = 1; i <= edges; ++i) es.push_back({0, i});
  return tree_from_edges(edges + 1, es);
}

Tree path(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return tree_from_edges(edges + 1, es);
}

}  // namespace bflow
