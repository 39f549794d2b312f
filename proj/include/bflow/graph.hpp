#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bflow {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Neighbor lists are sorted and
// edges() keeps insertion order, so edge i of a tree is vertex i of its
// line graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Throws std::invalid_argument on out-of-range ids, loops or duplicates.
  static SimpleGraph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<int> degrees() const;

  bool is_connected() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// A connected simple graph with exactly n-1 edges.
class Tree {
 public:
  // Throws InvalidGraph(kNotATree) if g is not a tree.
  static Tree from_graph(SimpleGraph g);

  const SimpleGraph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  int edge_count() const noexcept { return graph_.edge_count(); }

 private:
  explicit Tree(SimpleGraph g) : graph_(std::move(g)) {}

  SimpleGraph graph_;
};

// Edge-list text: "n m", then m lines "u v". Lines whose first
// non-blank character is '#' and blank lines are skipped.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph read_graph_file(const std::string& path);
std::string to_edge_list(const SimpleGraph& g);

// Vertex i of the result is tree edge i; two vertices are adjacent iff the
// tree edges share an endpoint. Throws InvalidGraph(kEmpty) for a tree
// without edges.
SimpleGraph line_graph_of_tree(const Tree& t);

}  // namespace bflow
