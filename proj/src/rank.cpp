#include "degrank/rank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degrank {

const char* to_string(Method m) {
    switch (m) {
        case Method::pl: return "pl";
        case Method::us: return "us";
        case Method::mh: return "mh";
        case Method::rw: return "rw";
        case Method::pd: return "pd";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "pl") return Method::pl;
    if (name == "us") return Method::us;
    if (name == "mh") return Method::mh;
    if (name == "rw") return Method::rw;
    if (name == "pd") return Method::pd;
    throw std::invalid_argument("unknown method: " + name);
}

namespace {

double clamp_rank(double value, double n_est) {
    return std::clamp(value, 1.0, std::max(1.0, n_est));
}

}  // namespace

double pl_mass_above(double gamma, double d_min, double d_max, Degree d_u) {
    if (gamma == 1.0) throw std::invalid_argument("gamma = 1 is singular");
    if (!(d_min > 0) || !(d_max > d_min))
        throw std::invalid_argument("need 0 < d_min < d_max");
    const double e = 1.0 - gamma;
    const double top = std::pow(d_max, e);
    return (top - std::pow(static_cast<double>(d_u) + 1.0, e)) / (top - std::pow(d_min, e));
}

double expected_rank_pl(double n, double gamma, double d_min, double d_max, Degree d_u) {
    return clamp_rank(n * pl_mass_above(gamma, d_min, d_max, d_u) + 1.0, n);
}

double rank_pl(const NetworkParams& params, Degree d_u) {
    if (!params.gamma)
        throw std::invalid_argument("PL method needs a power-law exponent estimate");
    return expected_rank_pl(params.est_size, *params.gamma, params.est_min_degree,
                            params.est_max_degree, d_u);
}

std::uint64_t local_rank(const SampleSet& s, Degree d_u) {
    if (s.size() == 0) throw std::invalid_argument("empty sample");
    std::uint64_t above = 0;
    for (auto it = s.degree_counts.upper_bound(d_u); it != s.degree_counts.end(); ++it)
        above += it->second;
    return above + 1;
}

double rank_us(double n_est, std::size_t s, std::uint64_t r_local) {
    if (s == 0) throw std::invalid_argument("sample size must be >= 1");
    return clamp_rank(n_est * static_cast<double>(r_local) / static_cast<double>(s), n_est);
}

double rank_mh(const SampleSet& s, double n_est, Degree d_u) {
    if (s.method != SampleMethod::mhrw)
        throw std::invalid_argument("rank_mh needs a Metropolis-Hastings sample");
    return rank_us(n_est, s.size(), local_rank(s, d_u));
}

ResampleWeights rw_resample_weights(const SampleSet& s) {
    if (s.size() == 0) throw std::invalid_argument("empty sample");
    ResampleWeights w;
    double total = 0.0;
    for (const auto& [d, count] : s.degree_counts) {
        if (d == 0) continue;  // walks never emit degree-0 nodes
        total += static_cast<double>(count) / d;
    }
    double q_max = 0.0;
    for (const auto& [d, count] : s.degree_counts) {
        if (d == 0) continue;
        const double q = (static_cast<double>(count) / d) / total;
        w.q[d] = q;
        q_max = std::max(q_max, q);
    }
    // k = min over degrees of 1/q(j); the largest q gives the smallest 1/q
    w.k = 1.0 / q_max;
    return w;
}

double rank_rw(const SampleSet& s, double n_est, Degree d_u) {
    if (s.method != SampleMethod::rw)
        throw std::invalid_argument("rank_rw needs a random-walk sample");
    if (s.size() == 0) throw std::invalid_argument("empty sample");
    double total = 0.0;
    double above = 0.0;
    for (const auto& [d, count] : s.degree_counts) {
        const double weight = static_cast<double>(count) / d;
        total += weight;
        if (d > d_u) above += weight;
    }
    return clamp_rank(n_est * above / total + 1.0, n_est);
}

double rank_pd(double n_est, double d_avg_est, Degree d_max_est, Degree d_u) {
    if (!(d_avg_est > 0)) throw std::invalid_argument("average degree must be positive");
    if (d_max_est < 1) throw std::invalid_argument("maximum degree must be >= 1");
    if (d_avg_est > 700) throw std::invalid_argument("average degree too large for the tail sum");

    double term = std::exp(-d_avg_est);  // Poisson pmf at j = 0
    double tail = 0.0;
    for (Degree j = 1; j <= d_max_est; ++j) {
        term *= d_avg_est / j;
        if (j > d_u) tail += term;
    }
    return clamp_rank(n_est * tail + 1.0, n_est);
}

double estimate_rank(Method method, const NetworkParams& params, const SampleSet& s, Degree d_u) {
    switch (method) {
        case Method::pl:
            return rank_pl(params, d_u);
        case Method::us:
            return rank_us(params.est_size, s.size(), local_rank(s, d_u));
        case Method::mh:
            return rank_mh(s, params.est_size, d_u);
        case Method::rw:
            return rank_rw(s, params.est_size, d_u);
        case Method::pd:
            return rank_pd(params.est_size, params.est_avg_degree, params.est_max_degree, d_u);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace degrank
