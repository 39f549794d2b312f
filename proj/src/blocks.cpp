#include "bflow/blocks.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/property_map/property_map.hpp>

#include "bflow/error.hpp"

namespace bflow {

int BlockDecomposition::degree(Vertex v) const {
  int d = 0;
  for (BlockId b : blocks_of_.at(v)) d += block_size(b) - 1;
  return d;
}

namespace {

struct EdgeComponent {
  std::size_t component;
};

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property, EdgeComponent>;

std::vector<std::vector<Vertex>> biconnected_blocks(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    // Connected with no edges: a single vertex forms one trivial block.
    return {{0}};
  }
  BoostGraph bg(n);
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, EdgeComponent{0}, bg);
  auto component = boost::get(&EdgeComponent::component, bg);
  std::size_t count = boost::biconnected_components(bg, component);

  std::vector<std::vector<Vertex>> blocks(count);
  std::vector<std::size_t> edges_in(count, 0);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    std::size_t c = component[*it];
    blocks[c].push_back(static_cast<Vertex>(boost::source(*it, bg)));
    blocks[c].push_back(static_cast<Vertex>(boost::target(*it, bg)));
    ++edges_in[c];
  }
  for (std::size_t c = 0; c < count; ++c) {
    auto& vs = blocks[c];
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::size_t s = vs.size();
    if (edges_in[c] != s * (s - 1) / 2) {
      throw InvalidGraph(InvalidGraph::Reason::kNotBlockGraph,
                         "not a block graph: block containing vertex " + std::to_string(vs.front()) +
                             " with " + std::to_string(s) + " vertices is not a clique");
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

BlockDecomposition validate_claw_free_block(const SimpleGraph& g) {
  if (g.vertex_count() == 0) {
    throw InvalidGraph(InvalidGraph::Reason::kEmpty, "graph has no vertices");
  }
  if (!g.is_connected()) {
    throw InvalidGraph(InvalidGraph::Reason::kNotConnected, "graph is not connected");
  }
  BlockDecomposition d;
  d.blocks_ = biconnected_blocks(g);
  d.blocks_of_.assign(g.vertex_count(), {});
  for (BlockId b = 0; b < d.block_count(); ++b) {
    d.omega_ = std::max(d.omega_, d.block_size(b));
    for (Vertex v : d.blocks_[b]) d.blocks_of_[v].push_back(b);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d.blocks_of_[v].size() >= 3) {
      throw InvalidGraph(InvalidGraph::Reason::kClaw,
                         "not claw-free: vertex " + std::to_string(v) + " lies in " +
                             std::to_string(d.blocks_of_[v].size()) + " blocks");
    }
    if (d.blocks_of_[v].size() == 2) d.cut_vertices_.push_back(v);
  }
  return d;
}

RootedBlockTree root_decomposition(const BlockDecomposition& d, BlockId root) {
  if (root < 0 || root >= d.block_count()) {
    throw PreconditionError("invalid root block id " + std::to_string(root));
  }
  RootedBlockTree t;
  t.decomposition_ = d;
  t.root_ = root;
  t.nodes_.assign(d.block_count(), {});

  // Preorder by explicit stack; reversing it yields children before parents.
  std::vector<BlockId> preorder;
  preorder.reserve(d.block_count());
  std::vector<BlockId> stack{root};
  while (!stack.empty()) {
    BlockId b = stack.back();
    stack.pop_back();
    preorder.push_back(b);
    RootedBlock& node = t.nodes_[b];
    for (Vertex x : d.block(b)) {
      if (x == node.cut_to_parent || !d.is_cut_vertex(x)) continue;
      auto owners = d.blocks_of(x);
      BlockId child = owners[0] == b ? owners[1] : owners[0];
      node.children.push_back({x, child});
      t.nodes_[child].parent = b;
      t.nodes_[child].cut_to_parent = x;
      stack.push_back(child);
    }
  }
  t.post_order_.assign(preorder.rbegin(), preorder.rend());
  t.rebuild_orders();
  return t;
}

void RootedBlockTree::rebuild_orders() {
  for (BlockId b = 0; b < block_count(); ++b) {
    RootedBlock& node = nodes_[b];
    node.order.clear();
    if (node.cut_to_parent >= 0) node.order.push_back(node.cut_to_parent);
    for (const ChildLink& c : node.children) node.order.push_back(c.cut);
    for (Vertex x : decomposition_.block(b)) {
      if (x == node.cut_to_parent) continue;
      bool is_child_cut = std::any_of(node.children.begin(), node.children.end(),
                                      [x](const ChildLink& c) { return c.cut == x; });
      if (!is_child_cut) node.order.push_back(x);
    }
  }
}

RootedBlockTree shuffle_children(const RootedBlockTree& t, std::uint64_t seed) {
  RootedBlockTree out = t;
  std::mt19937_64 rng(seed);
  for (RootedBlock& node : out.nodes_) std::shuffle(node.children.begin(), node.children.end(), rng);
  out.rebuild_orders();
  return out;
}

BlockGraph BlockGraph::validate(SimpleGraph g) {
  BlockDecomposition d = validate_claw_free_block(g);
  return BlockGraph(std::move(g), std::move(d));
}

BlockGraph BlockGraph::from_tree(const Tree& t) { return validate(line_graph_of_tree(t)); }

}  // namespace bflow
