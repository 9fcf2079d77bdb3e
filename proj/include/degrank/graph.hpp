#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degrank {

using NodeId = std::uint32_t;
using Degree = std::uint32_t;

// Thrown by the edge-list reader for lines that are not two integer tokens.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Immutable undirected simple graph in CSR form. Node ids are dense in
// [0, node_count). Neighbor lists are sorted, symmetric, self-loop and
// duplicate free. Safe to share across concurrent readers.
class Graph {
public:
    // Takes ownership of an edge list; drops self-loops and duplicates.
    // Node ids must already be < node_count.
    static Graph from_edges(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return static_cast<NodeId>(offsets_.size() - 1); }
    std::uint64_t edge_count() const { return adjacency_.size() / 2; }

    Degree degree(NodeId u) const {
        return static_cast<Degree>(offsets_[u + 1] - offsets_[u]);
    }
    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    bool has_edge(NodeId u, NodeId v) const;

    Degree max_degree() const { return max_degree_; }
    Degree min_degree() const { return min_degree_; }
    double avg_degree() const {
        return 2.0 * static_cast<double>(edge_count()) / node_count();
    }

    // histogram[d] = number of nodes with degree d
    std::vector<std::uint64_t> degree_histogram() const;

    // Degrees present in the graph, ascending.
    std::vector<Degree> distinct_degrees() const;

    // Maps dense ids back to the ids seen in the input file; empty when the
    // graph was generated (ids are already canonical).
    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }
    void set_original_ids(std::vector<std::uint64_t> ids) { original_ids_ = std::move(ids); }

private:
    std::vector<std::uint64_t> offsets_;   // size node_count + 1
    std::vector<NodeId> adjacency_;        // size 2 * edge_count, sorted per node
    Degree max_degree_ = 0;
    Degree min_degree_ = 0;
    std::vector<std::uint64_t> original_ids_;
};

// Exact degree ranks: rank(u) = 1 + |{v : d_v > d_u}|. Equal degrees share a
// rank; the maximum-degree nodes have rank 1.
class RankTable {
public:
    RankTable(std::vector<std::uint64_t> nodes_above, std::vector<std::uint32_t> node_rank)
        : nodes_above_(std::move(nodes_above)), node_rank_(std::move(node_rank)) {}

    std::uint32_t rank_of(NodeId u) const { return node_rank_[u]; }

    // Shared rank of every node with degree d; degrees above the maximum
    // rank first.
    std::uint32_t rank_of_degree(Degree d) const {
        if (d >= nodes_above_.size()) return 1;
        return static_cast<std::uint32_t>(nodes_above_[d]) + 1;
    }

    NodeId node_count() const { return static_cast<NodeId>(node_rank_.size()); }

private:
    std::vector<std::uint64_t> nodes_above_;  // [d] = #nodes with degree > d
    std::vector<std::uint32_t> node_rank_;
};

RankTable exact_degree_ranks(const Graph& g);

// Edge-list ingestion. One edge per line, two whitespace-separated integer
// ids; '#' and '%' lines are comments. Ids are remapped to a dense range in
// first-appearance order and the mapping is retained on the graph.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Canonical edge list over dense ids (u < v per line), ascending.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// Versioned binary cache for fast reload of large graphs.
void save_binary_file(const Graph& g, const std::string& path);
Graph load_binary_file(const std::string& path);

// Loads either format, sniffing the binary magic.
Graph load_graph_file(const std::string& path);

// Node ids of the largest connected component (singleton nodes count as
// components of size 1).
std::vector<NodeId> largest_component(const Graph& g);

// Induced subgraph with ids remapped to [0, nodes.size()); original_ids is
// filled with the outer ids. For a full undirected component this preserves
// every degree.
Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes);

}  // namespace degrank
