#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degrank/graph.hpp"
#include "degrank/sample.hpp"

namespace degrank {

// Raised when a walk produced no usable collisions; the caller should retry
// with a longer walk.
class InsufficientSamplesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NetworkKind { real_world, synthetic };

const char* to_string(NetworkKind k);

struct ParamProvenance {
    std::uint64_t seed = 0;
    std::uint32_t repetitions = 0;
    std::size_t walk_length = 0;
    std::size_t smooth_length = 0;
    double smoothing_c = 0.0;
    double min_gap_fraction = 0.025;
    bool neighbor_collisions = false;
    std::vector<std::uint64_t> seeds;
};

// Estimated network parameters: size n', degree extremes d'_min/d'_max,
// average degree d'_avg, the power-law exponent gamma and its normalization
// constant. gamma and norm_const are absent when the degree statistics are
// degenerate (d'_avg <= d'_min, e.g. regular graphs).
struct NetworkParams {
    double est_size = 0.0;
    Degree est_min_degree = 0;
    Degree est_max_degree = 0;
    double est_avg_degree = 0.0;
    std::optional<double> gamma;
    std::optional<double> norm_const;
    ParamProvenance provenance;
};

// Network size from random-walk collisions. Pairs of positions (k, l) with
// l - k > min_gap_fraction * s count as collision opportunities; the
// degree-ratio sum over the same pairs removes the walk's degree bias:
//
//   n' = sum_{pairs} (d_k/d_l + d_l/d_k) / (2 * #{pairs with x_k = x_l})
//
// Computed in O(s) with prefix sums. Throws InsufficientSamplesError when no
// collision occurred.
double estimate_size(const SampleSet& walk, double min_gap_fraction = 0.025);

// Same estimator, additionally detecting collisions one step early through
// the neighbor lists: a pair with x_l adjacent to x_k counts 1/d_{x_k}. This
// is how the size estimator is used in the full pipeline; it sharply reduces
// variance on sparse graphs where exact collisions are rare.
double estimate_size(const SampleSet& walk, const Graph& g, double min_gap_fraction = 0.025);

// Average degree from a smoothed walk with constant c. Under the stationary
// law ~ (d_u + c) the harmonic re-weighting
//   d'_avg = sum d/(d+c) / sum 1/(d+c)
// is unbiased; it is exact on regular graphs for every c.
double estimate_avg_degree(const SampleSet& walk, double c);

// Picks the smoothing constant from the geometric grid {1, 2, 4, ...,
// 2^ceil(log2 U)} (U = max degree seen by a pilot walk) by minimizing the
// empirical variance of the average-degree estimate across short pilot
// walks; ties go to the smallest c.
double choose_smoothing_c(const Graph& g, std::size_t budget, std::uint64_t seed);

// d'_max = max degree available in the samples.
Degree estimate_max_degree(const SampleSet& s);

// Real-world networks use d'_min = 1; synthetic (BA/ER) networks use the
// minimum degree available in the samples.
Degree estimate_min_degree(const SampleSet& s, NetworkKind kind);

// Power-law exponent, gamma ~= 2 + d_min / (d_avg - d_min).
double estimate_gamma(double d_min, double d_avg);

// Normalization constant of f(j) = c * j^-gamma over [d_min, d_max]:
// c = (1 - gamma) / (d_max^(1-gamma) - d_min^(1-gamma)).
double norm_const(double gamma, double d_min, double d_max);

struct ParamPipelineConfig {
    double sample_fraction = 0.01;      // walk length = max(100, fraction * n)
    std::uint32_t repetitions = 10;     // runs averaged for the final value
    double min_gap_fraction = 0.025;
    bool neighbor_collisions = true;
    NetworkKind kind = NetworkKind::real_world;
    double smoothing_c = -1.0;          // < 0: choose via the pilot grid sweep
    std::size_t smoothing_budget = 0;   // 0: same as the walk length
    std::uint64_t seed = 0;
};

// Full preprocessing pipeline: size / max / min from random-walk samples,
// average degree from a smoothed walk, repeated and averaged.
NetworkParams estimate_params(const Graph& g, const ParamPipelineConfig& cfg);

// Parameters taken from the graph itself (the evaluation's "actual
// parameters" mode).
NetworkParams actual_params(const Graph& g);

std::string to_key_value(const NetworkParams& p);
std::string to_json_string(const NetworkParams& p);
NetworkParams params_from_json_string(const std::string& text);

}  // namespace degrank
