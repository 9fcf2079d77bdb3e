#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "degrank/graph.hpp"
#include "degrank/params.hpp"
#include "degrank/rank.hpp"

namespace degrank {

// Err_abs = |R_est - R_act|
double abs_error(double est, std::uint64_t act);

// Err_wtd = Err_abs/n * (n - R_act + 1)/n * 100; the second factor is the
// node's percentile, so the same absolute error weighs more near rank 1.
double weighted_error(double est, std::uint64_t act, std::uint64_t n);

// Percentage average absolute error: mean over degrees, over network size,
// times 100.
double paae(const std::vector<double>& abs_errors_by_degree, std::uint64_t n);

struct DegreeErrorRow {
    Degree degree = 0;
    std::uint32_t act_rank = 0;
    double mean_est_rank = 0.0;
    double mean_abs_err = 0.0;
    double mean_wtd_err = 0.0;
};

// Per-degree and aggregate errors for one method on one graph, averaged
// over trials. paae and avg_wtd average the per-degree means over all
// distinct degrees.
struct ErrorReport {
    Method method = Method::us;
    std::vector<DegreeErrorRow> per_degree;  // ascending degree
    double paae = 0.0;
    double avg_wtd = 0.0;
    std::uint32_t trials = 0;
    double sample_fraction = 0.0;
    std::vector<std::uint64_t> seeds;
    NodeId node_count = 0;
    std::uint64_t edge_count = 0;
};

struct ExperimentConfig {
    double sample_fraction = 0.01;
    std::uint32_t trials = 20;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seeds;  // optional explicit per-trial seeds
};

// The per-degree evaluation protocol: per trial, draw a sample with the
// method's sampler, estimate the rank of every distinct degree and compare
// with the exact ranks. Walk samplers run on the largest connected
// component; exact ranks use the whole graph. Uniform sampling with
// fraction >= 1 takes the whole vertex set.
ErrorReport run_experiment(const Graph& g, Method method, const NetworkParams& params,
                           const ExperimentConfig& cfg);

struct ProfilePoint {
    std::uint32_t act_rank = 0;
    double mean_abs_err = 0.0;
};

// (rank, error) rows sorted by rank for log-log plots. Throws if the report
// and rank table disagree (different graphs).
std::vector<ProfilePoint> error_vs_rank_profile(const ErrorReport& report, const RankTable& ranks);

struct SweepRow {
    NodeId n = 0;
    Method method = Method::us;
    double paae = 0.0;
    double avg_wtd = 0.0;
};

struct SweepConfig {
    Degree k = 10;  // shared BA density
    std::vector<Method> methods;
    double sample_fraction = 0.01;
    std::uint32_t trials = 20;
    std::uint64_t seed = 0;
    bool actual_parameters = false;  // skip the estimation pipeline
};

// Error versus network size over BA graphs of the same density.
std::vector<SweepRow> size_sweep(const std::vector<NodeId>& sizes, const SweepConfig& cfg);

// CSV with a '#'-prefixed JSON metadata line followed by one row per degree.
void write_report_csv(const ErrorReport& report, std::ostream& out);

// Header and data rows only; callers that prepend their own metadata line
// (the CLI embeds the full run configuration) use this.
void write_report_rows(const ErrorReport& report, std::ostream& out);

// The '#'-prefixed metadata line of write_report_csv, without the trailing
// newline.
std::string report_meta_json(const ErrorReport& report);

// One estimate per distinct degree from a single sample draw.
std::vector<RankEstimate> batch_estimate(const Graph& g, Method method,
                                         const NetworkParams& params, double sample_fraction,
                                         std::uint64_t seed);

// Batch rows as CSV: degree, method, est_rank, act_rank, abs_err, wtd_err.
void write_batch_csv(const Graph& g, const std::vector<RankEstimate>& rows, std::ostream& out);

}  // namespace degrank
