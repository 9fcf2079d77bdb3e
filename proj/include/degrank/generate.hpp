#pragma once

#include <cstdint>

#include "degrank/graph.hpp"

namespace degrank {

// Barabasi-Albert preferential attachment. Starts from k isolated seed
// nodes; node k joins to all of them and every later node attaches to k
// distinct existing nodes with probability proportional to current degree,
// so edge_count = k * (n - k). Deterministic given seed.
Graph generate_ba(NodeId n, Degree k, std::uint64_t seed);

// Erdos-Renyi G(n, p) with p = avg_degree_target / (n - 1). Pairs are
// visited by geometric skipping, O(m) expected. Isolated nodes are kept.
// Deterministic given seed.
Graph generate_er(NodeId n, double avg_degree_target, std::uint64_t seed);

}  // namespace degrank
