#include "degrank/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degrank/rng.hpp"

namespace degrank {

Graph generate_ba(NodeId n, Degree k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("ba: k must be >= 1");
    if (n <= k) throw std::invalid_argument("ba: need n > k");

    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(k) * (n - k));

    // One entry per edge endpoint; drawing an index uniformly selects a node
    // with probability proportional to its degree.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    // Node k adopts the whole isolated seed core.
    for (NodeId v = 0; v < k; ++v) {
        edges.emplace_back(k, v);
        endpoints.push_back(k);
        endpoints.push_back(v);
    }

    std::vector<NodeId> targets;
    targets.reserve(k);
    for (NodeId t = k + 1; t < n; ++t) {
        targets.clear();
        while (targets.size() < k) {
            const NodeId candidate = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (NodeId v : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_er(NodeId n, double avg_degree_target, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("er: need n >= 2");
    if (!(avg_degree_target > 0.0) || avg_degree_target > static_cast<double>(n) - 1.0)
        throw std::invalid_argument("er: average degree target must be in (0, n-1]");

    const double p = avg_degree_target / (static_cast<double>(n) - 1.0);
    std::vector<std::pair<NodeId, NodeId>> edges;

    if (p >= 1.0) {
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, std::move(edges));
    }

    edges.reserve(static_cast<std::size_t>(p * 0.5 * n * (static_cast<double>(n) - 1.0) * 1.1) + 16);

    // Geometric skipping over the linearized pair space (Batagelj & Brandes).
    Rng rng(seed);
    const double log_1mp = std::log1p(-p);
    std::uint64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
        const double r = rng.uniform01();
        const double skip = std::floor(std::log1p(-r) / log_1mp);
        if (skip > 4.6e18) break;  // past the end of the pair space
        w += 1 + static_cast<std::int64_t>(skip);
        while (w >= static_cast<std::int64_t>(v) && v < n) {
            w -= static_cast<std::int64_t>(v);
            ++v;
        }
        if (v < n) edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(w));
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace degrank
