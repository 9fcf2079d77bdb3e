#include "degrank/sample.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "degrank/rng.hpp"

namespace degrank {

const char* to_string(SampleMethod m) {
    switch (m) {
        case SampleMethod::uniform: return "uniform";
        case SampleMethod::rw: return "rw";
        case SampleMethod::mhrw: return "mhrw";
        case SampleMethod::smoothed: return "smoothed";
    }
    return "?";
}

namespace {

void finalize(SampleSet& s, const Graph& g) {
    s.degrees.reserve(s.trace.size());
    s.observed_max_degree = 0;
    s.observed_min_degree = std::numeric_limits<Degree>::max();
    for (NodeId u : s.trace) {
        const Degree d = g.degree(u);
        s.degrees.push_back(d);
        ++s.degree_counts[d];
        s.observed_max_degree = std::max(s.observed_max_degree, d);
        s.observed_min_degree = std::min(s.observed_min_degree, d);
    }
}

NodeId pick_start(const Graph& g, Rng& rng) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("walk start: graph has no edges");
    // uniform over nodes that can move
    for (;;) {
        const NodeId u = static_cast<NodeId>(rng.below(g.node_count()));
        if (g.degree(u) > 0) return u;
    }
}

// Shared kernel for rw (c = 0) and smoothed (c > 0) walks.
SampleSet walk(const Graph& g, std::size_t s, double c, std::uint64_t seed,
               std::optional<NodeId> start, SampleMethod method) {
    if (s == 0) throw std::invalid_argument("sample size must be >= 1");
    if (c < 0) throw std::invalid_argument("smoothing constant must be >= 0");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");

    Rng rng(seed);
    NodeId cur = start ? *start : pick_start(g, rng);
    if (cur >= g.node_count()) throw std::invalid_argument("start node out of range");
    if (g.degree(cur) == 0) throw std::invalid_argument("walk cannot move from a degree-0 start");

    SampleSet out;
    out.method = method;
    out.seed = seed;
    out.smoothing_c = c;
    out.trace.reserve(s);
    out.trace.push_back(cur);
    for (std::size_t step = 1; step < s; ++step) {
        const Degree d = g.degree(cur);
        if (c > 0 && rng.uniform01() < c / (d + c)) {
            // self-loop mass: stay
        } else {
            cur = g.neighbors(cur)[rng.below(d)];
        }
        out.trace.push_back(cur);
    }
    finalize(out, g);
    return out;
}

}  // namespace

SampleSet sample_uniform(const Graph& g, std::size_t s, std::uint64_t seed) {
    if (s == 0) throw std::invalid_argument("sample size must be >= 1");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    Rng rng(seed);
    SampleSet out;
    out.method = SampleMethod::uniform;
    out.seed = seed;
    out.trace.reserve(s);
    for (std::size_t i = 0; i < s; ++i)
        out.trace.push_back(static_cast<NodeId>(rng.below(g.node_count())));
    finalize(out, g);
    return out;
}

SampleSet sample_rw(const Graph& g, std::size_t s, std::uint64_t seed,
                    std::optional<NodeId> start) {
    return walk(g, s, 0.0, seed, start, SampleMethod::rw);
}

SampleSet sample_smoothed(const Graph& g, std::size_t s, double c, std::uint64_t seed,
                          std::optional<NodeId> start) {
    return walk(g, s, c, seed, start, SampleMethod::smoothed);
}

SampleSet sample_mhrw(const Graph& g, std::size_t s, std::uint64_t seed,
                      std::optional<NodeId> start) {
    if (s == 0) throw std::invalid_argument("sample size must be >= 1");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");

    Rng rng(seed);
    NodeId cur = start ? *start : pick_start(g, rng);
    if (cur >= g.node_count()) throw std::invalid_argument("start node out of range");
    if (g.degree(cur) == 0) throw std::invalid_argument("walk cannot move from a degree-0 start");

    SampleSet out;
    out.method = SampleMethod::mhrw;
    out.seed = seed;
    out.trace.reserve(s);
    out.trace.push_back(cur);
    for (std::size_t step = 1; step < s; ++step) {
        const Degree du = g.degree(cur);
        const NodeId v = g.neighbors(cur)[rng.below(du)];
        const Degree dv = g.degree(v);
        // accept with min(1, d_u/d_v)
        if (dv <= du || rng.uniform01() < static_cast<double>(du) / dv) cur = v;
        out.trace.push_back(cur);
    }
    finalize(out, g);
    return out;
}

SampleSet sample_all(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    SampleSet out;
    out.method = SampleMethod::uniform;
    out.trace.resize(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) out.trace[u] = u;
    finalize(out, g);
    return out;
}

SampleSet sample_from_trace(const Graph& g, SampleMethod method, std::vector<NodeId> trace,
                            std::uint64_t seed, double smoothing_c) {
    if (trace.empty()) throw std::invalid_argument("trace must be non-empty");
    for (NodeId u : trace)
        if (u >= g.node_count()) throw std::invalid_argument("trace node out of range");
    SampleSet out;
    out.method = method;
    out.seed = seed;
    out.smoothing_c = smoothing_c;
    out.trace = std::move(trace);
    finalize(out, g);
    return out;
}

std::map<Degree, std::uint64_t> rederive_degree_counts(const SampleSet& s) {
    std::map<Degree, std::uint64_t> counts;
    for (Degree d : s.degrees) ++counts[d];
    return counts;
}

void write_sample_csv(const SampleSet& s, std::ostream& out) {
    nlohmann::ordered_json meta;
    meta["format"] = "degrank/sample-v1";
    meta["method"] = to_string(s.method);
    meta["seed"] = s.seed;
    meta["smoothing_c"] = s.smoothing_c;
    out << '#' << meta.dump() << '\n';
    out << "step,node_id,degree\n";
    for (std::size_t i = 0; i < s.trace.size(); ++i)
        out << i << ',' << s.trace[i] << ',' << s.degrees[i] << '\n';
}

}  // namespace degrank
