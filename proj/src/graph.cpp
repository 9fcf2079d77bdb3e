#include "degrank/graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

namespace degrank {

Graph Graph::from_edges(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
    if (node_count == 0) throw std::invalid_argument("graph must have at least one node");

    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    Graph g;
    std::vector<std::uint64_t> counts(node_count + 1, 0);
    for (const auto& [u, v] : edges) {
        ++counts[u + 1];
        ++counts[v + 1];
    }
    for (NodeId i = 0; i < node_count; ++i) counts[i + 1] += counts[i];

    g.offsets_ = counts;
    g.adjacency_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(counts.begin(), counts.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < node_count; ++u) {
        auto begin = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto end = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(begin, end);
    }

    g.max_degree_ = 0;
    g.min_degree_ = std::numeric_limits<Degree>::max();
    for (NodeId u = 0; u < node_count; ++u) {
        const Degree d = g.degree(u);
        g.max_degree_ = std::max(g.max_degree_, d);
        g.min_degree_ = std::min(g.min_degree_, d);
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint64_t> Graph::degree_histogram() const {
    std::vector<std::uint64_t> hist(max_degree_ + 1, 0);
    for (NodeId u = 0; u < node_count(); ++u) ++hist[degree(u)];
    return hist;
}

std::vector<Degree> Graph::distinct_degrees() const {
    const auto hist = degree_histogram();
    std::vector<Degree> out;
    for (Degree d = 0; d < hist.size(); ++d)
        if (hist[d] > 0) out.push_back(d);
    return out;
}

RankTable exact_degree_ranks(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    const auto hist = g.degree_histogram();

    // suffix sums: nodes_above[d] = sum of hist[j] for j > d
    std::vector<std::uint64_t> above(hist.size(), 0);
    for (Degree d = static_cast<Degree>(hist.size()) - 1; d > 0; --d)
        above[d - 1] = above[d] + hist[d];

    std::vector<std::uint32_t> node_rank(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        node_rank[u] = static_cast<std::uint32_t>(above[g.degree(u)]) + 1;
    return RankTable(std::move(above), std::move(node_rank));
}

namespace {

bool parse_token(const char*& p, const char* end, std::uint64_t& value) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end || *p < '0' || *p > '9') return false;
    value = 0;
    while (p < end && *p >= '0' && *p <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(*p - '0');
        ++p;
    }
    return true;
}

bool only_whitespace(const char* p, const char* end) {
    while (p < end) {
        if (*p != ' ' && *p != '\t' && *p != '\r') return false;
        ++p;
    }
    return true;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* p = line.data();
        const char* end = p + line.size();
        if (only_whitespace(p, end)) continue;
        while (*p == ' ' || *p == '\t') ++p;
        if (*p == '#' || *p == '%') continue;

        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!parse_token(p, end, a) || !parse_token(p, end, b))
            throw ParseError("expected two integer node ids", line_no);
        if (!only_whitespace(p, end))
            throw ParseError("trailing tokens after edge", line_no);
        raw_edges.emplace_back(a, b);
    }
    if (raw_edges.empty()) throw std::runtime_error("edge list is empty");

    // Dense ids in ascending input-id order; loading is then independent of
    // line order and a reload of a canonical dump is the identity map.
    std::vector<std::uint64_t> original_ids;
    original_ids.reserve(2 * raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        original_ids.push_back(a);
        original_ids.push_back(b);
    }
    std::sort(original_ids.begin(), original_ids.end());
    original_ids.erase(std::unique(original_ids.begin(), original_ids.end()),
                       original_ids.end());

    const auto dense = [&](std::uint64_t raw) {
        const auto it = std::lower_bound(original_ids.begin(), original_ids.end(), raw);
        return static_cast<NodeId>(it - original_ids.begin());
    };
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) edges.emplace_back(dense(a), dense(b));

    Graph g = Graph::from_edges(static_cast<NodeId>(original_ids.size()), std::move(edges));
    g.set_original_ids(std::move(original_ids));
    return g;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_edge_list(g, out);
}

namespace {

constexpr char kMagic[4] = {'D', 'G', 'R', 'K'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_raw(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void write_vec(std::ostream& out, const std::vector<T>& v) {
    write_raw(out, static_cast<std::uint64_t>(v.size()));
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_raw(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
}

template <typename T>
std::vector<T> read_vec(std::istream& in) {
    std::uint64_t size = 0;
    read_raw(in, size);
    std::vector<T> v(size);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(size * sizeof(T)));
    return v;
}

}  // namespace

void save_binary_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(kMagic, 4);
    write_raw(out, kVersion);
    write_raw(out, static_cast<std::uint64_t>(g.node_count()));
    write_raw(out, g.edge_count());

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    write_vec(out, edges);
    write_vec(out, g.original_ids());
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error(path + ": not a graph cache file");
    std::uint32_t version = 0;
    read_raw(in, version);
    if (version != kVersion)
        throw std::runtime_error(path + ": unsupported cache version " + std::to_string(version));
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    read_raw(in, n);
    read_raw(in, m);
    auto edges = read_vec<std::pair<NodeId, NodeId>>(in);
    auto ids = read_vec<std::uint64_t>(in);
    if (!in || edges.size() != m) throw std::runtime_error(path + ": truncated cache file");
    Graph g = Graph::from_edges(static_cast<NodeId>(n), std::move(edges));
    g.set_original_ids(std::move(ids));
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw std::runtime_error("cannot open " + path);
    char magic[4] = {0, 0, 0, 0};
    probe.read(magic, 4);
    probe.close();
    if (std::memcmp(magic, kMagic, 4) == 0) return load_binary_file(path);
    return load_edge_list_file(path);
}

std::vector<NodeId> largest_component(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<NodeId> component(n, n);  // n = unvisited
    std::vector<NodeId> stack;
    NodeId best = 0;
    std::uint64_t best_size = 0;
    NodeId comp = 0;

    for (NodeId s = 0; s < n; ++s) {
        if (component[s] != n) continue;
        std::uint64_t size = 0;
        stack.push_back(s);
        component[s] = comp;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : g.neighbors(u)) {
                if (component[v] == n) {
                    component[v] = comp;
                    stack.push_back(v);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best = comp;
        }
        ++comp;
    }

    std::vector<NodeId> nodes;
    nodes.reserve(best_size);
    for (NodeId u = 0; u < n; ++u)
        if (component[u] == best) nodes.push_back(u);
    return nodes;
}

Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node set");
    std::unordered_map<NodeId, NodeId> remap;
    remap.reserve(nodes.size());
    std::vector<std::uint64_t> outer_ids;
    outer_ids.reserve(nodes.size());
    for (NodeId u : nodes) {
        remap.emplace(u, static_cast<NodeId>(outer_ids.size()));
        outer_ids.push_back(u);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u : nodes) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v) {
                auto it = remap.find(v);
                if (it != remap.end()) edges.emplace_back(remap[u], it->second);
            }
        }
    }
    Graph sub = Graph::from_edges(static_cast<NodeId>(nodes.size()), std::move(edges));
    sub.set_original_ids(std::move(outer_ids));
    return sub;
}

}  // namespace degrank
