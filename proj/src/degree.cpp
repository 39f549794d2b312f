#include "bflow/degree.hpp"

#include <algorithm>
#include <functional>

namespace bflow {

namespace {

int m_degree_of(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  int m = 0;
  // degrees[k-1] is the k-th largest degree; the predicate is monotone.
  for (int k = 1; k <= static_cast<int>(degrees.size()); ++k) {
    if (degrees[k - 1] >= k - 1) m = k;
    else break;
  }
  return m;
}

std::vector<Vertex> dense_of(const std::vector<int>& degrees, int k) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(degrees.size()); ++v) {
    if (degrees[v] >= k - 1) out.push_back(v);
  }
  return out;
}

}  // namespace

int m_degree(const SimpleGraph& g) { return m_degree_of(g.degrees()); }

std::vector<Vertex> dense_vertices(const SimpleGraph& g, int k) { return dense_of(g.degrees(), k); }

std::vector<Vertex> DegreeProfile::dense(int k) const { return dense_of(degrees, k); }

DegreeProfile degree_profile(const SimpleGraph& g, int omega) {
  DegreeProfile p;
  p.degrees = g.degrees();
  p.omega = omega;
  p.m_degree = m_degree_of(p.degrees);
  return p;
}

}  // namespace bflow
