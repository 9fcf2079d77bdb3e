#include "degrank/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "degrank/generate.hpp"
#include "degrank/rng.hpp"

namespace degrank {

double abs_error(double est, std::uint64_t act) {
    if (act < 1) throw std::invalid_argument("actual rank must be >= 1");
    return std::abs(est - static_cast<double>(act));
}

double weighted_error(double est, std::uint64_t act, std::uint64_t n) {
    if (act < 1 || act > n) throw std::invalid_argument("actual rank must lie in [1, n]");
    const double nn = static_cast<double>(n);
    const double percentile = (nn - static_cast<double>(act) + 1.0) / nn;
    return abs_error(est, act) / nn * percentile * 100.0;
}

double paae(const std::vector<double>& abs_errors_by_degree, std::uint64_t n) {
    if (abs_errors_by_degree.empty()) throw std::invalid_argument("no per-degree errors");
    double sum = 0.0;
    for (double e : abs_errors_by_degree) sum += e;
    return sum / static_cast<double>(abs_errors_by_degree.size()) /
           static_cast<double>(n) * 100.0;
}

namespace {

// Fixed shortest-round-trip-ish formatting keeps CSV bodies byte-stable.
std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Walks cannot leave a component; run them on the largest one. The returned
// pointer is either the graph itself (when connected) or storage.
const Graph* component_for_walks(const Graph& g, Method method, std::optional<Graph>& storage) {
    if (method != Method::mh && method != Method::rw) return &g;
    const auto lcc = largest_component(g);
    if (lcc.size() == g.node_count()) return &g;
    storage = induced_subgraph(g, lcc);
    return &*storage;
}

SampleSet draw_sample(const Graph& g, const Graph& walk_graph, Method method, double fraction,
                      std::size_t s, std::uint64_t seed) {
    switch (method) {
        case Method::us:
            return fraction >= 1.0 ? sample_all(g) : sample_uniform(g, s, seed);
        case Method::mh:
            return sample_mhrw(walk_graph, s, seed);
        case Method::rw:
            return sample_rw(walk_graph, s, seed);
        case Method::pl:
        case Method::pd:
            return {};  // closed form; no sampling
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace

ErrorReport run_experiment(const Graph& g, Method method, const NetworkParams& params,
                           const ExperimentConfig& cfg) {
    if (!(cfg.sample_fraction > 0.0) || cfg.sample_fraction > 1.0)
        throw std::invalid_argument("sample_fraction must be in (0, 1]");
    if (cfg.trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (!cfg.seeds.empty() && cfg.seeds.size() != cfg.trials)
        throw std::invalid_argument("explicit seed list must match the trial count");

    const NodeId n = g.node_count();
    const RankTable ranks = exact_degree_ranks(g);
    const std::vector<Degree> degrees = g.distinct_degrees();
    const std::size_t s = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(cfg.sample_fraction * n)));

    std::optional<Graph> lcc_storage;
    const Graph* walk_graph = component_for_walks(g, method, lcc_storage);

    ErrorReport report;
    report.method = method;
    report.trials = cfg.trials;
    report.sample_fraction = cfg.sample_fraction;
    report.node_count = n;
    report.edge_count = g.edge_count();
    report.per_degree.resize(degrees.size());

    std::vector<double> est_sum(degrees.size(), 0.0);
    std::vector<double> abs_sum(degrees.size(), 0.0);
    std::vector<double> wtd_sum(degrees.size(), 0.0);

    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed =
            cfg.seeds.empty() ? split_seed(cfg.seed, t) : cfg.seeds[t];
        report.seeds.push_back(trial_seed);

        const SampleSet sample =
            draw_sample(g, *walk_graph, method, cfg.sample_fraction, s, trial_seed);

        for (std::size_t i = 0; i < degrees.size(); ++i) {
            const Degree d = degrees[i];
            const std::uint32_t act = ranks.rank_of_degree(d);
            const double est = estimate_rank(method, params, sample, d);
            est_sum[i] += est;
            abs_sum[i] += abs_error(est, act);
            wtd_sum[i] += weighted_error(est, act, n);
        }
    }

    double abs_total = 0.0;
    double wtd_total = 0.0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        DegreeErrorRow& row = report.per_degree[i];
        row.degree = degrees[i];
        row.act_rank = ranks.rank_of_degree(degrees[i]);
        row.mean_est_rank = est_sum[i] / cfg.trials;
        row.mean_abs_err = abs_sum[i] / cfg.trials;
        row.mean_wtd_err = wtd_sum[i] / cfg.trials;
        abs_total += row.mean_abs_err;
        wtd_total += row.mean_wtd_err;
    }
    report.paae = abs_total / static_cast<double>(degrees.size()) / n * 100.0;
    report.avg_wtd = wtd_total / static_cast<double>(degrees.size());
    return report;
}

std::vector<ProfilePoint> error_vs_rank_profile(const ErrorReport& report,
                                                const RankTable& ranks) {
    if (report.node_count != ranks.node_count())
        throw std::invalid_argument("report and rank table come from different graphs");
    std::vector<ProfilePoint> profile;
    profile.reserve(report.per_degree.size());
    for (const auto& row : report.per_degree) {
        if (ranks.rank_of_degree(row.degree) != row.act_rank)
            throw std::invalid_argument("report and rank table come from different graphs");
        profile.push_back({row.act_rank, row.mean_abs_err});
    }
    // per-degree ranks are distinct, so reversing degree order sorts by rank
    std::reverse(profile.begin(), profile.end());
    return profile;
}

std::vector<SweepRow> size_sweep(const std::vector<NodeId>& sizes, const SweepConfig& cfg) {
    std::vector<SweepRow> rows;
    std::uint64_t stream = 0;
    for (NodeId n : sizes) {
        const Graph g = generate_ba(n, cfg.k, split_seed(cfg.seed, 5000 + stream));

        NetworkParams params;
        if (cfg.actual_parameters) {
            params = actual_params(g);
        } else {
            ParamPipelineConfig pcfg;
            pcfg.sample_fraction = cfg.sample_fraction;
            pcfg.kind = NetworkKind::synthetic;
            pcfg.seed = split_seed(cfg.seed, 6000 + stream);
            params = estimate_params(g, pcfg);
        }

        for (Method m : cfg.methods) {
            ExperimentConfig ecfg;
            ecfg.sample_fraction = cfg.sample_fraction;
            ecfg.trials = cfg.trials;
            ecfg.seed = split_seed(cfg.seed, 7000 + stream);
            const ErrorReport report = run_experiment(g, m, params, ecfg);
            rows.push_back({n, m, report.paae, report.avg_wtd});
        }
        ++stream;
    }
    return rows;
}

std::vector<RankEstimate> batch_estimate(const Graph& g, Method method,
                                         const NetworkParams& params, double sample_fraction,
                                         std::uint64_t seed) {
    if (!(sample_fraction > 0.0) || sample_fraction > 1.0)
        throw std::invalid_argument("sample_fraction must be in (0, 1]");
    const std::size_t s = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(sample_fraction * g.node_count())));
    std::optional<Graph> lcc_storage;
    const Graph* walk_graph = component_for_walks(g, method, lcc_storage);
    const SampleSet sample = draw_sample(g, *walk_graph, method, sample_fraction, s, seed);

    std::vector<RankEstimate> rows;
    for (Degree d : g.distinct_degrees()) {
        RankEstimate row;
        row.node_degree = d;
        row.method = method;
        row.est_rank = estimate_rank(method, params, sample, d);
        row.sample_size = sample.size();
        row.seed = seed;
        rows.push_back(row);
    }
    return rows;
}

void write_batch_csv(const Graph& g, const std::vector<RankEstimate>& rows, std::ostream& out) {
    const RankTable ranks = exact_degree_ranks(g);
    out << "degree,method,est_rank,act_rank,abs_err,wtd_err\n";
    for (const auto& row : rows) {
        const std::uint32_t act = ranks.rank_of_degree(row.node_degree);
        out << row.node_degree << ',' << to_string(row.method) << ','
            << fmt_real(row.est_rank) << ',' << act << ','
            << fmt_real(abs_error(row.est_rank, act)) << ','
            << fmt_real(weighted_error(row.est_rank, act, g.node_count())) << '\n';
    }
}

std::string report_meta_json(const ErrorReport& report) {
    nlohmann::ordered_json meta;
    meta["format"] = "degrank/report-v1";
    meta["method"] = to_string(report.method);
    meta["trials"] = report.trials;
    meta["sample_fraction"] = report.sample_fraction;
    meta["node_count"] = report.node_count;
    meta["edge_count"] = report.edge_count;
    meta["paae"] = report.paae;
    meta["avg_wtd"] = report.avg_wtd;
    meta["seeds"] = report.seeds;
    return meta.dump();
}

void write_report_rows(const ErrorReport& report, std::ostream& out) {
    out << "degree,act_rank,mean_est_rank,mean_abs_err,mean_wtd_err\n";
    for (const auto& row : report.per_degree) {
        out << row.degree << ',' << row.act_rank << ',' << fmt_real(row.mean_est_rank) << ','
            << fmt_real(row.mean_abs_err) << ',' << fmt_real(row.mean_wtd_err) << '\n';
    }
}

void write_report_csv(const ErrorReport& report, std::ostream& out) {
    out << '#' << report_meta_json(report) << '\n';
    write_report_rows(report, out);
}

}  // namespace degrank
