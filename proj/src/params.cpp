#include "degrank/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "degrank/rng.hpp"

namespace degrank {

const char* to_string(NetworkKind k) {
    return k == NetworkKind::real_world ? "real_world" : "synthetic";
}

namespace {

// First index gap that makes a pair eligible: l - k > min_gap_fraction * s.
std::size_t eligible_gap(std::size_t s, double min_gap_fraction) {
    return static_cast<std::size_t>(std::floor(min_gap_fraction * static_cast<double>(s))) + 1;
}

// Pair sums behind the collision estimator. Tallies from independent walks
// add up; pooling them before taking the ratio avoids the 1/collisions bias
// when a single walk yields only a handful of hits.
struct CollisionTally {
    double ratio_sum = 0.0;
    double exact_hits = 0.0;
    double neighbor_hits = 0.0;
    bool with_neighbors = false;

    void add(const SampleSet& walk, const Graph* g, double min_gap_fraction) {
        if (walk.method != SampleMethod::rw)
            throw std::invalid_argument("size estimate needs random-walk samples");
        const std::size_t s = walk.size();
        if (s < 100) throw std::invalid_argument("size estimate needs a walk of >= 100 steps");
        if (!(min_gap_fraction > 0.0) || min_gap_fraction >= 0.5)
            throw std::invalid_argument("min_gap_fraction must be in (0, 0.5)");
        const std::size_t gap = eligible_gap(s, min_gap_fraction);
        if (gap >= s) throw InsufficientSamplesError("walk too short for the collision gap");
        if (g != nullptr) with_neighbors = true;

        // ratio_sum accumulates d_k/d_l + d_l/d_k over eligible pairs (k, l),
        // folded into one pass with running prefix sums of d and 1/d.
        double prefix_deg = 0.0;
        double prefix_inv = 0.0;
        std::unordered_map<NodeId, std::uint32_t> occurrences;
        for (std::size_t l = gap; l < s; ++l) {
            const std::size_t k = l - gap;  // newest position whose pairs are eligible
            prefix_deg += walk.degrees[k];
            prefix_inv += 1.0 / walk.degrees[k];
            ++occurrences[walk.trace[k]];

            const double dl = walk.degrees[l];
            ratio_sum += prefix_deg / dl + dl * prefix_inv;

            auto hit = occurrences.find(walk.trace[l]);
            if (hit != occurrences.end()) exact_hits += hit->second;
            if (g != nullptr) {
                // neighbor match (x_l adjacent to x_k) counts as a collision
                // detected one step early, scaled by 1/d_{x_k}
                for (NodeId u : g->neighbors(walk.trace[l])) {
                    auto it = occurrences.find(u);
                    if (it != occurrences.end())
                        neighbor_hits += static_cast<double>(it->second) / g->degree(u);
                }
            }
        }
    }

    // Both hit counts estimate the same per-pair collision rate, so the
    // denominator is 2 * exact alone, or exact + neighbor combined.
    double estimate() const {
        const double denom = with_neighbors ? exact_hits + neighbor_hits : 2.0 * exact_hits;
        if (denom <= 0.0)
            throw InsufficientSamplesError(
                "no collisions among eligible sample pairs; run a longer walk");
        return ratio_sum / denom;
    }
};

double collision_size_estimate(const SampleSet& walk, const Graph* g, double min_gap_fraction) {
    CollisionTally tally;
    tally.add(walk, g, min_gap_fraction);
    return tally.estimate();
}

}  // namespace

double estimate_size(const SampleSet& walk, double min_gap_fraction) {
    return collision_size_estimate(walk, nullptr, min_gap_fraction);
}

double estimate_size(const SampleSet& walk, const Graph& g, double min_gap_fraction) {
    return collision_size_estimate(walk, &g, min_gap_fraction);
}

double estimate_avg_degree(const SampleSet& walk, double c) {
    if (walk.size() == 0) throw std::invalid_argument("empty walk");
    if (c < 0) throw std::invalid_argument("smoothing constant must be >= 0");
    // a plain random walk is a smoothed walk with c = 0
    if (walk.method != SampleMethod::smoothed && walk.method != SampleMethod::rw)
        throw std::invalid_argument("average-degree estimate needs smoothed-walk samples");
    double num = 0.0;
    double den = 0.0;
    for (const auto& [d, count] : walk.degree_counts) {
        num += count * (static_cast<double>(d) / (d + c));
        den += count * (1.0 / (d + c));
    }
    return num / den;
}

double choose_smoothing_c(const Graph& g, std::size_t budget, std::uint64_t seed) {
    if (budget < 500) throw std::invalid_argument("smoothing pilot budget must be >= 500 steps");

    const std::size_t scout_len = std::max<std::size_t>(100, budget / 5);
    const SampleSet scout = sample_rw(g, scout_len, split_seed(seed, 0));
    const Degree u_bound = std::max<Degree>(1, scout.observed_max_degree);

    std::vector<double> grid;
    for (double c = 1.0; ; c *= 2.0) {
        grid.push_back(c);
        if (c >= static_cast<double>(u_bound)) break;
    }

    constexpr std::size_t kPilots = 5;
    const std::size_t pilot_len =
        std::max<std::size_t>(25, (budget - scout_len) / (grid.size() * kPilots));

    double best_c = grid.front();
    double best_var = std::numeric_limits<double>::infinity();
    std::uint64_t stream = 1;
    for (double c : grid) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t p = 0; p < kPilots; ++p) {
            const SampleSet pilot = sample_smoothed(g, pilot_len, c, split_seed(seed, stream++));
            const double est = estimate_avg_degree(pilot, c);
            sum += est;
            sum_sq += est * est;
        }
        const double mean = sum / kPilots;
        const double var = std::max(0.0, sum_sq / kPilots - mean * mean);
        if (var < best_var) {
            best_var = var;
            best_c = c;
        }
    }
    return best_c;
}

Degree estimate_max_degree(const SampleSet& s) {
    if (s.size() == 0) throw std::invalid_argument("empty sample");
    return s.observed_max_degree;
}

Degree estimate_min_degree(const SampleSet& s, NetworkKind kind) {
    if (s.size() == 0) throw std::invalid_argument("empty sample");
    return kind == NetworkKind::real_world ? 1 : s.observed_min_degree;
}

double estimate_gamma(double d_min, double d_avg) {
    if (!(d_min > 0)) throw std::invalid_argument("d_min must be positive");
    if (!(d_avg > d_min))
        throw std::invalid_argument("degenerate degree statistics: need d_avg > d_min");
    return 2.0 + d_min / (d_avg - d_min);
}

double norm_const(double gamma, double d_min, double d_max) {
    if (gamma == 1.0) throw std::invalid_argument("gamma = 1 is singular");
    if (!(d_min > 0) || !(d_max > d_min))
        throw std::invalid_argument("need 0 < d_min < d_max");
    return (1.0 - gamma) / (std::pow(d_max, 1.0 - gamma) - std::pow(d_min, 1.0 - gamma));
}

NetworkParams estimate_params(const Graph& g, const ParamPipelineConfig& cfg) {
    if (cfg.repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");

    const std::size_t walk_len = std::max<std::size_t>(
        100, static_cast<std::size_t>(std::llround(cfg.sample_fraction * g.node_count())));
    const std::size_t smooth_len = cfg.smoothing_budget > 0 ? cfg.smoothing_budget : walk_len;

    double c = cfg.smoothing_c;
    if (c < 0)
        c = choose_smoothing_c(g, std::max<std::size_t>(500, walk_len), split_seed(cfg.seed, 9000));

    NetworkParams p;
    p.provenance.seed = cfg.seed;
    p.provenance.repetitions = cfg.repetitions;
    p.provenance.walk_length = walk_len;
    p.provenance.smooth_length = smooth_len;
    p.provenance.smoothing_c = c;
    p.provenance.min_gap_fraction = cfg.min_gap_fraction;
    p.provenance.neighbor_collisions = cfg.neighbor_collisions;

    // The collision pair sums are pooled over the repetition walks and the
    // ratio taken once: per-walk ratios are biased upward when a walk sees
    // only a few collisions (sparse graphs at 1% budgets).
    CollisionTally tally;
    double avg_sum = 0.0;
    Degree max_seen = 0;
    Degree min_seen = std::numeric_limits<Degree>::max();
    for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
        const std::uint64_t rep_seed = split_seed(cfg.seed, rep);
        p.provenance.seeds.push_back(rep_seed);

        const SampleSet rw_walk = sample_rw(g, walk_len, rep_seed);
        tally.add(rw_walk, cfg.neighbor_collisions ? &g : nullptr, cfg.min_gap_fraction);
        max_seen = std::max(max_seen, estimate_max_degree(rw_walk));
        min_seen = std::min(min_seen, estimate_min_degree(rw_walk, cfg.kind));

        const SampleSet smooth_walk =
            sample_smoothed(g, smooth_len, c, split_seed(cfg.seed, 1000 + rep));
        avg_sum += estimate_avg_degree(smooth_walk, c);
    }

    p.est_size = tally.estimate();
    p.est_avg_degree = avg_sum / cfg.repetitions;
    p.est_max_degree = max_seen;
    p.est_min_degree = min_seen;
    if (p.est_min_degree > 0 && p.est_avg_degree > p.est_min_degree &&
        p.est_max_degree > p.est_min_degree) {
        p.gamma = estimate_gamma(p.est_min_degree, p.est_avg_degree);
        p.norm_const = norm_const(*p.gamma, p.est_min_degree, p.est_max_degree);
    }
    return p;
}

NetworkParams actual_params(const Graph& g) {
    NetworkParams p;
    p.est_size = g.node_count();
    p.est_min_degree = g.min_degree();
    p.est_max_degree = g.max_degree();
    p.est_avg_degree = g.avg_degree();
    if (p.est_min_degree > 0 && p.est_avg_degree > p.est_min_degree &&
        p.est_max_degree > p.est_min_degree) {
        p.gamma = estimate_gamma(p.est_min_degree, p.est_avg_degree);
        p.norm_const = norm_const(*p.gamma, p.est_min_degree, p.est_max_degree);
    }
    return p;
}

namespace {

nlohmann::ordered_json params_json(const NetworkParams& p) {
    nlohmann::ordered_json j;
    j["est_size"] = p.est_size;
    j["est_min_degree"] = p.est_min_degree;
    j["est_max_degree"] = p.est_max_degree;
    j["est_avg_degree"] = p.est_avg_degree;
    if (p.gamma) j["gamma"] = *p.gamma;
    else j["gamma"] = nullptr;
    if (p.norm_const) j["norm_const"] = *p.norm_const;
    else j["norm_const"] = nullptr;
    j["provenance"] = {
        {"seed", p.provenance.seed},
        {"repetitions", p.provenance.repetitions},
        {"walk_length", p.provenance.walk_length},
        {"smooth_length", p.provenance.smooth_length},
        {"smoothing_c", p.provenance.smoothing_c},
        {"min_gap_fraction", p.provenance.min_gap_fraction},
        {"neighbor_collisions", p.provenance.neighbor_collisions},
        {"seeds", p.provenance.seeds},
    };
    return j;
}

}  // namespace

std::string to_key_value(const NetworkParams& p) {
    std::ostringstream out;
    out.precision(12);
    out << "est_size " << p.est_size << '\n'
        << "est_min_degree " << p.est_min_degree << '\n'
        << "est_max_degree " << p.est_max_degree << '\n'
        << "est_avg_degree " << p.est_avg_degree << '\n';
    if (p.gamma) out << "gamma " << *p.gamma << '\n';
    if (p.norm_const) out << "norm_const " << *p.norm_const << '\n';
    out << "provenance.seed " << p.provenance.seed << '\n'
        << "provenance.repetitions " << p.provenance.repetitions << '\n'
        << "provenance.walk_length " << p.provenance.walk_length << '\n'
        << "provenance.smooth_length " << p.provenance.smooth_length << '\n'
        << "provenance.smoothing_c " << p.provenance.smoothing_c << '\n'
        << "provenance.min_gap_fraction " << p.provenance.min_gap_fraction << '\n'
        << "provenance.neighbor_collisions " << (p.provenance.neighbor_collisions ? 1 : 0)
        << '\n';
    return out.str();
}

std::string to_json_string(const NetworkParams& p) { return params_json(p).dump(2) + "\n"; }

NetworkParams params_from_json_string(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    NetworkParams p;
    p.est_size = j.at("est_size").get<double>();
    p.est_min_degree = j.at("est_min_degree").get<Degree>();
    p.est_max_degree = j.at("est_max_degree").get<Degree>();
    p.est_avg_degree = j.at("est_avg_degree").get<double>();
    if (j.contains("gamma") && !j["gamma"].is_null()) p.gamma = j["gamma"].get<double>();
    if (j.contains("norm_const") && !j["norm_const"].is_null())
        p.norm_const = j["norm_const"].get<double>();
    if (j.contains("provenance")) {
        const auto& pr = j["provenance"];
        p.provenance.seed = pr.value("seed", std::uint64_t{0});
        p.provenance.repetitions = pr.value("repetitions", std::uint32_t{0});
        p.provenance.walk_length = pr.value("walk_length", std::size_t{0});
        p.provenance.smooth_length = pr.value("smooth_length", std::size_t{0});
        p.provenance.smoothing_c = pr.value("smoothing_c", 0.0);
        p.provenance.min_gap_fraction = pr.value("min_gap_fraction", 0.025);
        p.provenance.neighbor_collisions = pr.value("neighbor_collisions", false);
        if (pr.contains("seeds")) p.provenance.seeds = pr["seeds"].get<std::vector<std::uint64_t>>();
    }
    return p;
}

}  // namespace degrank
