// Command-line front end: generate or ingest graphs, run the samplers and
// rank estimators, and reproduce the per-degree error analysis.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degrank/evaluate.hpp"
#include "degrank/generate.hpp"
#include "degrank/graph.hpp"
#include "degrank/params.hpp"
#include "degrank/rank.hpp"
#include "degrank/rng.hpp"
#include "degrank/sample.hpp"

namespace {

using namespace degrank;
using nlohmann::ordered_json;

constexpr const char* kSeedEnvVar = "DEGRANK_SEED";

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void print_graph_stats(const Graph& g) {
    std::cout << "n=" << g.node_count() << " m=" << g.edge_count()
              << " avg_degree=" << fmt_real(g.avg_degree()) << '\n';
}

NetworkKind parse_kind(const std::string& name) {
    if (name == "real" || name == "real_world") return NetworkKind::real_world;
    if (name == "synthetic") return NetworkKind::synthetic;
    throw CLI::ValidationError("--network-kind", "expected 'real' or 'synthetic'");
}

std::vector<Method> parse_methods(const std::string& csv) {
    std::vector<Method> methods;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) methods.push_back(method_from_string(token));
    if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");
    return methods;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

struct GenerateOpts {
    std::string model;
    std::uint64_t n = 0;
    Degree k = 10;
    double avg_deg = 10.0;
    std::uint64_t seed = 1;
    std::string output;
    bool no_cache = false;
};

int cmd_generate(const GenerateOpts& opt) {
    Graph g = opt.model == "ba"
                  ? generate_ba(static_cast<NodeId>(opt.n), opt.k, opt.seed)
                  : generate_er(static_cast<NodeId>(opt.n), opt.avg_deg, opt.seed);
    save_edge_list_file(g, opt.output);
    if (!opt.no_cache) save_binary_file(g, opt.output + ".bin");
    print_graph_stats(g);
    return 0;
}

struct IngestOpts {
    std::string input;
    std::string output;
    std::string edge_list_out;
};

int cmd_ingest(const IngestOpts& opt) {
    const Graph g = load_edge_list_file(opt.input);
    save_binary_file(g, opt.output);
    if (!opt.edge_list_out.empty()) save_edge_list_file(g, opt.edge_list_out);
    print_graph_stats(g);
    std::cout << "ids remapped to [0, " << g.node_count() << "); original ids kept in the cache\n";
    return 0;
}

struct ParamsOpts {
    std::string graph;
    double fraction = 0.01;
    std::uint32_t reps = 10;
    std::uint64_t seed = 1;
    std::string kind = "real";
    double min_gap = 0.025;
    double smoothing_c = -1.0;
    bool no_neighbor = false;
    std::string output;
};

int cmd_estimate_params(const ParamsOpts& opt) {
    const Graph g = load_graph_file(opt.graph);
    ParamPipelineConfig cfg;
    cfg.sample_fraction = opt.fraction;
    cfg.repetitions = opt.reps;
    cfg.min_gap_fraction = opt.min_gap;
    cfg.neighbor_collisions = !opt.no_neighbor;
    cfg.kind = parse_kind(opt.kind);
    cfg.smoothing_c = opt.smoothing_c;
    cfg.seed = opt.seed;
    const NetworkParams p = estimate_params(g, cfg);
    std::cout << to_key_value(p);
    if (!opt.output.empty()) {
        auto out = open_out(opt.output);
        out << to_json_string(p);
    }
    return 0;
}

struct SampleOpts {
    std::string graph;
    std::string method = "rw";
    std::uint64_t size = 0;
    double fraction = 0.01;
    std::uint64_t seed = 1;
    std::int64_t start = -1;
    double smoothing_c = 2.0;
    std::string output;
};

int cmd_sample(const SampleOpts& opt) {
    const Graph g = load_graph_file(opt.graph);
    const std::size_t s = opt.size > 0
                              ? opt.size
                              : std::max<std::size_t>(
                                    1, static_cast<std::size_t>(
                                           std::llround(opt.fraction * g.node_count())));
    std::optional<NodeId> start;
    if (opt.start >= 0) start = static_cast<NodeId>(opt.start);

    SampleSet sample;
    if (opt.method == "uniform") sample = sample_uniform(g, s, opt.seed);
    else if (opt.method == "rw") sample = sample_rw(g, s, opt.seed, start);
    else if (opt.method == "mhrw") sample = sample_mhrw(g, s, opt.seed, start);
    else if (opt.method == "smoothed") sample = sample_smoothed(g, s, opt.smoothing_c, opt.seed, start);
    else throw CLI::ValidationError("--method", "expected uniform|rw|mhrw|smoothed");

    auto out = open_out(opt.output);
    write_sample_csv(sample, out);
    std::cout << "wrote " << sample.size() << " samples to " << opt.output << '\n';
    return 0;
}

struct RankOpts {
    std::string graph;
    std::string method = "rw";
    std::int64_t degree = -1;
    std::int64_t node = -1;
    bool all_degrees = false;
    double fraction = 0.01;
    std::uint64_t seed = 1;
    std::string params_file;
    bool use_actual = false;
    std::string kind = "real";
    bool with_truth = false;
    bool round_ranks = false;
    std::string output;
};

NetworkParams resolve_params(const Graph& g, const std::string& params_file, bool use_actual,
                             NetworkKind kind, double fraction, std::uint64_t seed) {
    if (!params_file.empty()) {
        std::ifstream in(params_file);
        if (!in) throw std::runtime_error("cannot open " + params_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return params_from_json_string(buf.str());
    }
    if (use_actual) return actual_params(g);
    ParamPipelineConfig cfg;
    cfg.sample_fraction = fraction;
    cfg.kind = kind;
    cfg.seed = split_seed(seed, 0xda7a);
    return estimate_params(g, cfg);
}

int cmd_rank(const RankOpts& opt) {
    const Graph g = load_graph_file(opt.graph);
    const Method method = method_from_string(opt.method);
    const NetworkKind kind = parse_kind(opt.kind);

    if (opt.all_degrees) {
        if (opt.output.empty())
            throw CLI::ValidationError("rank", "--all-degrees needs --output");
        const NetworkParams params =
            resolve_params(g, opt.params_file, opt.use_actual, kind, opt.fraction, opt.seed);
        const auto rows = batch_estimate(g, method, params, opt.fraction, opt.seed);
        auto out = open_out(opt.output);
        ordered_json meta;
        meta["format"] = "degrank/batch-v1";
        meta["method"] = to_string(method);
        meta["fraction"] = opt.fraction;
        meta["seed"] = opt.seed;
        out << '#' << meta.dump() << '\n';
        write_batch_csv(g, rows, out);
        std::cout << "wrote " << rows.size() << " rows to " << opt.output << '\n';
        return 0;
    }

    Degree d = 0;
    if (opt.degree >= 0) {
        d = static_cast<Degree>(opt.degree);
    } else if (opt.node >= 0) {
        if (opt.node >= g.node_count())
            throw std::runtime_error("unknown node id " + std::to_string(opt.node));
        d = g.degree(static_cast<NodeId>(opt.node));
    } else {
        throw CLI::ValidationError("rank", "give --degree, --node, or --all-degrees");
    }

    const NetworkParams params =
        resolve_params(g, opt.params_file, opt.use_actual, kind, opt.fraction, opt.seed);

    const std::size_t s = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(opt.fraction * g.node_count())));
    SampleSet sample;
    switch (method) {
        case Method::us:
            sample = opt.fraction >= 1.0 ? sample_all(g) : sample_uniform(g, s, opt.seed);
            break;
        case Method::mh: sample = sample_mhrw(g, s, opt.seed); break;
        case Method::rw: sample = sample_rw(g, s, opt.seed); break;
        default: break;
    }

    double est = estimate_rank(method, params, sample, d);
    if (opt.round_ranks) est = std::floor(est + 0.5);
    std::cout << "degree=" << d << " method=" << to_string(method)
              << " est_rank=" << fmt_real(est);
    if (opt.with_truth) {
        const RankTable ranks = exact_degree_ranks(g);
        const std::uint32_t act = ranks.rank_of_degree(d);
        std::cout << " act_rank=" << act << " abs_err=" << fmt_real(abs_error(est, act))
                  << " wtd_err=" << fmt_real(weighted_error(est, act, g.node_count()));
    }
    std::cout << '\n';
    return 0;
}

struct EvaluateOpts {
    std::string graph;
    std::string methods = "pl,us,mh,rw";
    double fraction = 0.01;
    std::uint32_t trials = 20;
    std::uint64_t seed = 1;
    std::string params_file;
    bool use_actual = false;
    std::string kind = "real";
    std::string output_dir = ".";
};

ordered_json run_config_json(const EvaluateOpts& opt) {
    ordered_json j;
    j["command"] = "evaluate";
    j["graph"] = opt.graph;
    j["methods"] = opt.methods;
    j["fraction"] = opt.fraction;
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    j["params_file"] = opt.params_file;
    j["actual_params"] = opt.use_actual;
    j["network_kind"] = opt.kind;
    return j;
}

int cmd_evaluate(const EvaluateOpts& opt) {
    const Graph g = load_graph_file(opt.graph);
    const std::vector<Method> methods = parse_methods(opt.methods);
    const NetworkKind kind = parse_kind(opt.kind);
    const NetworkParams params = resolve_params(g, opt.params_file, opt.use_actual, kind,
                                                opt.fraction, opt.seed);
    std::filesystem::create_directories(opt.output_dir);

    const ordered_json config = run_config_json(opt);
    std::ostringstream summary;
    summary << "method,paae,avg_wtd\n";
    for (Method m : methods) {
        ExperimentConfig cfg;
        cfg.sample_fraction = opt.fraction;
        cfg.trials = opt.trials;
        cfg.seed = split_seed(opt.seed, static_cast<std::uint64_t>(m));
        const ErrorReport report = run_experiment(g, m, params, cfg);

        ordered_json meta = ordered_json::parse(report_meta_json(report));
        meta["config"] = config;
        auto out = open_out(opt.output_dir + "/report_" + to_string(m) + ".csv");
        out << '#' << meta.dump() << '\n';
        write_report_rows(report, out);
        summary << to_string(m) << ',' << fmt_real(report.paae) << ','
                << fmt_real(report.avg_wtd) << '\n';
    }

    ordered_json meta;
    meta["format"] = "degrank/summary-v1";
    meta["config"] = config;
    auto out = open_out(opt.output_dir + "/summary.csv");
    out << '#' << meta.dump() << '\n' << summary.str();
    std::cout << summary.str();
    return 0;
}

struct SweepOpts {
    std::string sizes = "100000,200000,300000";
    Degree k = 10;
    std::string methods = "rw";
    double fraction = 0.01;
    std::uint32_t trials = 20;
    std::uint64_t seed = 1;
    bool use_actual = false;
    std::string output;
};

int cmd_sweep(const SweepOpts& opt) {
    std::vector<NodeId> sizes;
    std::stringstream ss(opt.sizes);
    std::string token;
    while (std::getline(ss, token, ',')) sizes.push_back(static_cast<NodeId>(std::stoull(token)));

    SweepConfig cfg;
    cfg.k = opt.k;
    cfg.methods = parse_methods(opt.methods);
    cfg.sample_fraction = opt.fraction;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.actual_parameters = opt.use_actual;
    const auto rows = size_sweep(sizes, cfg);

    ordered_json config;
    config["format"] = "degrank/sweep-v1";
    config["command"] = "sweep";
    config["sizes"] = opt.sizes;
    config["k"] = opt.k;
    config["methods"] = opt.methods;
    config["fraction"] = opt.fraction;
    config["trials"] = opt.trials;
    config["seed"] = opt.seed;
    config["actual_params"] = opt.use_actual;

    std::ostringstream body;
    body << "n,method,paae,avg_wtd\n";
    for (const auto& row : rows)
        body << row.n << ',' << to_string(row.method) << ',' << fmt_real(row.paae) << ','
             << fmt_real(row.avg_wtd) << '\n';
    if (!opt.output.empty()) {
        auto out = open_out(opt.output);
        out << '#' << config.dump() << '\n' << body.str();
    }
    std::cout << body.str();
    return 0;
}

void add_seed_option(CLI::App* cmd, std::uint64_t& seed) {
    cmd->add_option("--seed", seed, "RNG seed (env " + std::string(kSeedEnvVar) + ")")
        ->envname(kSeedEnvVar)
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degrank: estimate degree-centrality ranks from ~1% samples"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* generate = app.add_subcommand("generate", "generate a synthetic graph");
    generate->require_subcommand(1);
    auto* gen_ba = generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
    gen_ba->add_option("--n", gen.n, "node count")->required();
    gen_ba->add_option("--k", gen.k, "edges per new node")->capture_default_str();
    add_seed_option(gen_ba, gen.seed);
    gen_ba->add_option("--output", gen.output, "edge-list output path")->required();
    gen_ba->add_flag("--no-cache", gen.no_cache, "skip the binary cache");
    auto* gen_er = generate->add_subcommand("er", "Erdos-Renyi G(n, p)");
    gen_er->add_option("--n", gen.n, "node count")->required();
    gen_er->add_option("--avg-deg", gen.avg_deg, "target average degree")->required();
    add_seed_option(gen_er, gen.seed);
    gen_er->add_option("--output", gen.output, "edge-list output path")->required();
    gen_er->add_flag("--no-cache", gen.no_cache, "skip the binary cache");

    IngestOpts ing;
    auto* ingest = app.add_subcommand("ingest", "convert an edge list to a binary cache");
    ingest->add_option("--input", ing.input, "edge-list file")->required();
    ingest->add_option("--output", ing.output, "binary cache output")->required();
    ingest->add_option("--edge-list-out", ing.edge_list_out, "also dump the canonical edge list");

    ParamsOpts par;
    auto* params = app.add_subcommand("estimate-params", "estimate n', d'_min/max/avg, gamma");
    params->add_option("--graph", par.graph, "graph file (edge list or cache)")->required();
    params->add_option("--fraction", par.fraction, "walk length as a fraction of n")
        ->capture_default_str();
    params->add_option("--reps", par.reps, "repetitions to average")->capture_default_str();
    add_seed_option(params, par.seed);
    params->add_option("--network-kind", par.kind, "real|synthetic")->capture_default_str();
    params->add_option("--min-gap", par.min_gap, "collision pair gap fraction")
        ->capture_default_str();
    params->add_option("--smoothing-c", par.smoothing_c, "fixed smoothing c (default: auto)");
    params->add_flag("--no-neighbor-collisions", par.no_neighbor,
                     "count only exact collisions in the size estimator");
    params->add_option("--output", par.output, "write NetworkParams JSON here");

    SampleOpts smp;
    auto* sample = app.add_subcommand("sample", "draw a SampleSet and write it as CSV");
    sample->add_option("--graph", smp.graph)->required();
    sample->add_option("--method", smp.method, "uniform|rw|mhrw|smoothed")->capture_default_str();
    sample->add_option("--size", smp.size, "absolute sample size (overrides --fraction)");
    sample->add_option("--fraction", smp.fraction, "sample size as a fraction of n")
        ->capture_default_str();
    add_seed_option(sample, smp.seed);
    sample->add_option("--start", smp.start, "start node for walks (default: random)");
    sample->add_option("--smoothing-c", smp.smoothing_c, "c for the smoothed walk")
        ->capture_default_str();
    sample->add_option("--output", smp.output, "CSV output path")->required();

    RankOpts rnk;
    auto* rank = app.add_subcommand("rank", "estimate the rank of one degree or node");
    rank->add_option("--graph", rnk.graph)->required();
    rank->add_option("--method", rnk.method, "pl|us|mh|rw|pd")->capture_default_str();
    rank->add_option("--degree", rnk.degree, "degree to rank");
    rank->add_option("--node", rnk.node, "node id to rank (dense id)");
    rank->add_flag("--all-degrees", rnk.all_degrees,
                   "batch: every distinct degree, one row each (needs --output)");
    rank->add_option("--output", rnk.output, "CSV output for --all-degrees");
    rank->add_option("--fraction", rnk.fraction, "sample fraction")->capture_default_str();
    add_seed_option(rank, rnk.seed);
    rank->add_option("--params", rnk.params_file, "NetworkParams JSON file");
    rank->add_flag("--actual-params", rnk.use_actual, "use the graph's true parameters");
    rank->add_option("--network-kind", rnk.kind, "real|synthetic")->capture_default_str();
    rank->add_flag("--with-truth", rnk.with_truth, "also print the exact rank and errors");
    rank->add_flag("--round", rnk.round_ranks, "round the estimate half-up");

    EvaluateOpts ev;
    auto* evaluate = app.add_subcommand("evaluate", "per-degree error reports for each method");
    evaluate->add_option("--graph", ev.graph)->required();
    evaluate->add_option("--methods", ev.methods, "comma list of pl,us,mh,rw,pd")
        ->capture_default_str();
    evaluate->add_option("--fraction", ev.fraction)->capture_default_str();
    evaluate->add_option("--trials", ev.trials)->capture_default_str();
    add_seed_option(evaluate, ev.seed);
    evaluate->add_option("--params", ev.params_file, "NetworkParams JSON file");
    evaluate->add_flag("--actual-params", ev.use_actual, "use the graph's true parameters");
    evaluate->add_option("--network-kind", ev.kind, "real|synthetic")->capture_default_str();
    evaluate->add_option("--output-dir", ev.output_dir)->capture_default_str();

    SweepOpts swp;
    auto* sweep = app.add_subcommand("sweep", "error versus BA network size");
    sweep->add_option("--sizes", swp.sizes, "comma list of node counts")->capture_default_str();
    sweep->add_option("--k", swp.k, "BA attachment density")->capture_default_str();
    sweep->add_option("--methods", swp.methods)->capture_default_str();
    sweep->add_option("--fraction", swp.fraction)->capture_default_str();
    sweep->add_option("--trials", swp.trials)->capture_default_str();
    add_seed_option(sweep, swp.seed);
    sweep->add_flag("--actual-params", swp.use_actual, "skip the estimation pipeline");
    sweep->add_option("--output", swp.output, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_ba->parsed()) { gen.model = "ba"; return cmd_generate(gen); }
        if (gen_er->parsed()) { gen.model = "er"; return cmd_generate(gen); }
        if (ingest->parsed()) return cmd_ingest(ing);
        if (params->parsed()) return cmd_estimate_params(par);
        if (sample->parsed()) return cmd_sample(smp);
        if (rank->parsed()) return cmd_rank(rnk);
        if (evaluate->parsed()) return cmd_evaluate(ev);
        if (sweep->parsed()) return cmd_sweep(swp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
