#include "bflow/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "bflow/error.hpp"

namespace bflow {

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  SimpleGraph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("vertex id out of range in edge " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.edges_.push_back(e);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  return g;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) d[v] = static_cast<int>(adjacency_[v].size());
  return d;
}

bool SimpleGraph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

Tree Tree::from_graph(SimpleGraph g) {
  if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count() - 1 || !g.is_connected()) {
    throw InvalidGraph(InvalidGraph::Reason::kNotATree, "input is not a tree");
  }
  return Tree(std::move(g));
}

namespace {

std::vector<long long> parse_numbers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (is_skippable(line)) {
      if (end == text.size()) break;
      continue;
    }
    auto nums = parse_numbers(line, line_no);
    if (nums.size() != 2) throw ParseError(line_no, "expected two integers");
    if (n < 0) {
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative header value");
      if (n > 50'000'000) throw ParseError(line_no, "vertex count too large");
      seen.resize(static_cast<std::size_t>(n));
    } else {
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
      }
      long long u = nums[0];
      long long v = nums[1];
      if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      auto a = static_cast<Vertex>(std::min(u, v));
      auto b = static_cast<Vertex>(std::max(u, v));
      if (std::find(seen[a].begin(), seen[a].end(), b) != seen[a].end()) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      seen[a].push_back(b);
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(0, "missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return SimpleGraph::from_edges(static_cast<int>(n), edges);
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SimpleGraph line_graph_of_tree(const Tree& t) {
  const SimpleGraph& g = t.graph();
  if (g.edge_count() == 0) {
    throw InvalidGraph(InvalidGraph::Reason::kEmpty, "tree has no edges");
  }
  // Edges incident to each tree vertex form a clique in the line graph.
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) edges.push_back({star[a], star[b]});
    }
  }
  return SimpleGraph::from_edges(g.edge_count(), edges);
}

}  // namespace bflow
