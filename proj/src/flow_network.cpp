#include "bflow/flow_network.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "bflow/error.hpp"

namespace bflow {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kBlockVertex: return "block-vertex";
    case NodeKind::kBlockCash: return "block-cash";
    case NodeKind::kPairCash: return "pair-cash";
    case NodeKind::kSource: return "source";
  }
  return "?";
}

NodeId FlowNetwork::node_of(BlockId b, Vertex x, const BlockDecomposition& d) const {
  auto vs = d.block(b);
  auto it = std::lower_bound(vs.begin(), vs.end(), x);
  if (it == vs.end() || *it != x) return -1;
  return vertex_node.at(b).at(static_cast<std::size_t>(it - vs.begin()));
}

std::string FlowNetwork::dump() const {
  std::ostringstream out;
  out << "k " << k << '\n';
  out << "nodes " << nodes.size() << '\n';
  for (NodeId id = 0; id < static_cast<NodeId>(nodes.size()); ++id) {
    const NetNode& n = nodes[id];
    out << id << ' ' << to_string(n.kind) << ' ' << n.capacity;
    switch (n.kind) {
      case NodeKind::kBlockVertex: out << " B" << n.block << " x" << n.vertex; break;
      case NodeKind::kBlockCash: out << " B" << n.block; break;
      case NodeKind::kPairCash: out << " B" << n.block << " B" << n.parent_block; break;
      case NodeKind::kSource: out << " x" << n.vertex; break;
    }
    out << '\n';
  }
  out << "arcs " << arcs.size() << '\n';
  for (auto [from, to] : arcs) out << from << " -> " << to << '\n';
  out << "sinks";
  for (NodeId s : sinks) out << ' ' << s;
  out << '\n';
  return out.str();
}

FlowNetwork build_network(const RootedBlockTree& t, std::span<const Vertex> w, int k) {
  const BlockDecomposition& d = t.decomposition();
  if (k <= t.omega()) {
    throw PreconditionError("flow network needs k > omega (k=" + std::to_string(k) +
                            ", omega=" + std::to_string(t.omega()) + ")");
  }
  std::vector<char> in_w(d.vertex_count(), 0);
  for (Vertex x : w) {
    if (x < 0 || x >= d.vertex_count()) throw PreconditionError("vertex in W out of range");
    if (in_w[x]) throw PreconditionError("vertex " + std::to_string(x) + " repeated in W");
    if (t.degree(x) < k - 1) {
      throw PreconditionError("vertex " + std::to_string(x) + " is not " + std::to_string(k) +
                              "-dense (degree " + std::to_string(t.degree(x)) + ")");
    }
    in_w[x] = 1;
  }

  FlowNetwork net;
  net.k = k;
  auto add_node = [&net](NetNode node) {
    net.nodes.push_back(node);
    return static_cast<NodeId>(net.nodes.size() - 1);
  };

  net.vertex_node.resize(d.block_count());
  net.cash_node.assign(d.block_count(), -1);
  net.pair_node.assign(d.block_count(), -1);
  for (BlockId b = 0; b < d.block_count(); ++b) {
    for (Vertex x : d.block(b)) {
      net.vertex_node[b].push_back(add_node({NodeKind::kBlockVertex, b, -1, x, 1}));
    }
    net.cash_node[b] = add_node({NodeKind::kBlockCash, b, -1, -1, k - d.block_size(b)});
  }

  for (BlockId child = 0; child < d.block_count(); ++child) {
    const RootedBlock& node = t.node(child);
    if (node.parent < 0) continue;
    const BlockId parent = node.parent;
    const Vertex x = node.cut_to_parent;
    const NodeId child_x = net.node_of(child, x, d);
    const NodeId parent_x = net.node_of(parent, x, d);
    const NodeId child_cash = net.cash_node[child];
    const NodeId parent_cash = net.cash_node[parent];

    auto each_other = [&](BlockId b, auto&& fn) {
      auto vs = d.block(b);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] != x) fn(net.vertex_node[b][i]);
      }
    };

    if (!in_w[x]) {
      NodeId pair = add_node({NodeKind::kPairCash, child, parent, -1, k - 1});
      net.pair_node[child] = pair;
      each_other(child, [&](NodeId y) { net.arcs.emplace_back(y, pair); });
      each_other(parent, [&](NodeId y) { net.arcs.emplace_back(pair, y); });
      net.arcs.emplace_back(child_x, parent_x);
      net.arcs.emplace_back(child_cash, pair);
      net.arcs.emplace_back(pair, parent_cash);
    } else {
      NodeId pair = add_node({NodeKind::kPairCash, child, parent, -1, t.degree(x) - k + 1});
      net.pair_node[child] = pair;
      NodeId source = add_node({NodeKind::kSource, -1, -1, x, 1});
      net.sources.push_back(source);
      each_other(child, [&](NodeId y) {
        net.arcs.emplace_back(y, pair);
        net.arcs.emplace_back(y, parent_cash);
      });
      each_other(parent, [&](NodeId y) {
        net.arcs.emplace_back(child_cash, y);
        net.arcs.emplace_back(pair, y);
      });
      net.arcs.emplace_back(child_x, parent_x);
      net.arcs.emplace_back(source, child_x);
    }
  }

  const BlockId root = t.root();
  net.sinks = net.vertex_node[root];
  net.sinks.push_back(net.cash_node[root]);
  return net;
}

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using ResidualGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using ResidualEdge = boost::graph_traits<ResidualGraph>::edge_descriptor;

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  // Node splitting: node i becomes 2i (in) -> 2i+1 (out) with capacity c(i).
  const int n = static_cast<int>(net.nodes.size());
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  ResidualGraph g(2 * n + 2);
  auto capacity = boost::get(boost::edge_capacity, g);
  auto residual = boost::get(boost::edge_residual_capacity, g);
  auto reverse = boost::get(boost::edge_reverse, g);

  auto add_arc = [&](int u, int v, long cap) {
    ResidualEdge e = boost::add_edge(u, v, g).first;
    ResidualEdge r = boost::add_edge(v, u, g).first;
    capacity[e] = cap;
    capacity[r] = 0;
    reverse[e] = r;
    reverse[r] = e;
    return e;
  };

  const long unbounded = static_cast<long>(net.sources.size()) + 1;
  std::vector<ResidualEdge> through(n);
  for (int i = 0; i < n; ++i) through[i] = add_arc(2 * i, 2 * i + 1, net.nodes[i].capacity);
  std::vector<ResidualEdge> along;
  along.reserve(net.arcs.size());
  for (auto [from, to] : net.arcs) along.push_back(add_arc(2 * from + 1, 2 * to, unbounded));
  for (NodeId s : net.sources) add_arc(super_source, 2 * s, 1);
  for (NodeId s : net.sinks) add_arc(2 * s + 1, super_sink, unbounded);

  FlowResult result;
  if (net.sources.empty()) {
    result.per_node.assign(n, 0);
    result.per_arc.assign(net.arcs.size(), 0);
    return result;
  }
  result.value = static_cast<int>(boost::edmonds_karp_max_flow(g, super_source, super_sink));
  result.per_node.resize(n);
  for (int i = 0; i < n; ++i) {
    result.per_node[i] = static_cast<int>(capacity[through[i]] - residual[through[i]]);
  }
  result.per_arc.resize(net.arcs.size());
  for (std::size_t a = 0; a < along.size(); ++a) {
    result.per_arc[a] = static_cast<int>(capacity[along[a]] - residual[along[a]]);
  }
  return result;
}

bool is_flow_feasible(const RootedBlockTree& t, std::span<const Vertex> w, int k) {
  FlowNetwork net = build_network(t, w, k);
  return max_flow(net).value == static_cast<int>(w.size());
}

int max_feasible_source_set(const RootedBlockTree& t, int k) {
  std::vector<Vertex> dense;
  for (Vertex v = 0; v < t.decomposition().vertex_count(); ++v) {
    if (t.degree(v) >= k - 1) dense.push_back(v);
  }
  if (dense.size() > 24) throw PreconditionError("too many k-dense vertices for subset enumeration");
  int best = 0;
  const std::uint32_t subsets = 1u << dense.size();
  std::vector<Vertex> w;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    int size = std::popcount(mask);
    if (size > k || size <= best) continue;
    w.clear();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (mask & (1u << i)) w.push_back(dense[i]);
    }
    if (is_flow_feasible(t, w, k)) best = size;
  }
  return best;
}

}  // namespace bflow
