#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degrank/graph.hpp"

namespace degrank {

enum class SampleMethod { uniform, rw, mhrw, smoothed };

const char* to_string(SampleMethod m);

// Ordered multiset of sampled nodes. trace keeps repetitions; degree_counts
// is the per-degree tally n'_j. Immutable once returned.
struct SampleSet {
    SampleMethod method = SampleMethod::uniform;
    std::vector<NodeId> trace;
    std::vector<Degree> degrees;  // parallel to trace
    std::map<Degree, std::uint64_t> degree_counts;
    Degree observed_max_degree = 0;
    Degree observed_min_degree = 0;
    std::uint64_t seed = 0;
    double smoothing_c = 0.0;

    std::size_t size() const { return trace.size(); }
};

// s independent equiprobable draws with replacement.
SampleSet sample_uniform(const Graph& g, std::size_t s, std::uint64_t seed);

// Classical random walk: next node uniform among neighbors. The trace holds
// the s visited nodes including the start; no burn-in is removed.
SampleSet sample_rw(const Graph& g, std::size_t s, std::uint64_t seed,
                    std::optional<NodeId> start = {});

// Metropolis-Hastings walk: propose a uniform neighbor v, accept with
// min(1, d_u/d_v), otherwise stay. Every time step emits a sample, so
// rejections repeat the current node.
SampleSet sample_mhrw(const Graph& g, std::size_t s, std::uint64_t seed,
                      std::optional<NodeId> start = {});

// Walk on the graph with c/2 virtual self-loops per node: stay with
// probability c/(d_u + c), else move to a uniform neighbor. Stationary law
// is proportional to d_u + c; c = 0 reproduces sample_rw exactly.
SampleSet sample_smoothed(const Graph& g, std::size_t s, double c, std::uint64_t seed,
                          std::optional<NodeId> start = {});

// The whole vertex set, once each. Used for exhaustive (fraction = 1)
// uniform sampling where the local rank equals the exact rank.
SampleSet sample_all(const Graph& g);

// Builds a SampleSet from an explicit trace (tests, resampling tools).
SampleSet sample_from_trace(const Graph& g, SampleMethod method, std::vector<NodeId> trace,
                            std::uint64_t seed = 0, double smoothing_c = 0.0);

// Recomputes degree_counts from the trace; used to cross-check the cached
// tallies after sampling.
std::map<Degree, std::uint64_t> rederive_degree_counts(const SampleSet& s);

// CSV serialization: '#'-prefixed JSON metadata line, then step,node_id,degree.
void write_sample_csv(const SampleSet& s, std::ostream& out);

}  // namespace degrank
