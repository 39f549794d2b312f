#pragma once

#include <cstdint>
#include <vector>

#include "bflow/graph.hpp"

namespace bflow {

// Uniform random labeled tree with the given number of edges, decoded
// from a random Prufer sequence. Deterministic per seed.
Tree random_tree(int edges, std::uint64_t seed);

// Spine path on `spine` vertices plus pendant leaves hung on random spine
// vertices, `edges` edges in total. Requires 1 <= spine <= edges + 1.
Tree random_caterpillar(int edges, int spine, std::uint64_t seed);

// Every tree with `edges` edges up to isomorphism, in a deterministic order.
std::vector<Tree> all_trees(int edges);

Tree star(int edges);
Tree path(int edges);

}  // namespace bflow
