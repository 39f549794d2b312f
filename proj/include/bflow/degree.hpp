#pragma once

#include <vector>

#include "bflow/graph.hpp"

namespace bflow {

// Largest k such that at least k vertices have degree >= k - 1. This is
// the classical upper bound on the b-chromatic number. Returns 0 for the
// empty graph.
int m_degree(const SimpleGraph& g);

// D_k(G): the k-dense vertices, those with degree >= k - 1, ascending.
std::vector<Vertex> dense_vertices(const SimpleGraph& g, int k);

struct DegreeProfile {
  std::vector<int> degrees;
  int omega = 0;
  int m_degree = 0;

  std::vector<Vertex> dense(int k) const;
};

DegreeProfile degree_profile(const SimpleGraph& g, int omega);

}  // namespace bflow
