#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "degrank/params.hpp"
#include "degrank/sample.hpp"

namespace degrank {

enum class Method { pl, us, mh, rw, pd };

const char* to_string(Method m);
Method method_from_string(const std::string& name);

// Fraction of nodes expected to have degree above d_u under the power law
// f(j) = c j^-gamma on [d_min, d_max]:
//   (d_max^(1-gamma) - (d_u+1)^(1-gamma)) / (d_max^(1-gamma) - d_min^(1-gamma))
// Unclamped; can leave [0, 1] at the extremes.
double pl_mass_above(double gamma, double d_min, double d_max, Degree d_u);

// Expected degree rank under the power law, n * pl_mass_above + 1, clamped
// to [1, n]. Takes raw parameters so callers can feed either the actual or
// the estimated values.
double expected_rank_pl(double n, double gamma, double d_min, double d_max, Degree d_u);

// PL method: expected_rank_pl with the estimated parameters.
double rank_pl(const NetworkParams& params, Degree d_u);

// Rank of degree d_u inside the sample: 1 + #entries with a larger degree.
std::uint64_t local_rank(const SampleSet& s, Degree d_u);

// US method: linear extrapolation of the local rank, n' * R_local / s,
// clamped to [1, n'].
double rank_us(double n_est, std::size_t s, std::uint64_t r_local);

// MH method: the US extrapolation applied to Metropolis-Hastings samples.
double rank_mh(const SampleSet& s, double n_est, Degree d_u);

// Re-sampling law behind the RW method: q(j) = (n'_j / j) / sum_i n'_i / i,
// and the constant k = min over present degrees of 1/q(j).
struct ResampleWeights {
    std::map<Degree, double> q;
    double k = 0.0;
};
ResampleWeights rw_resample_weights(const SampleSet& s);

// RW method: degree-bias-corrected rank from plain random-walk samples,
//   n' * (sum_{j > d_u} n'_j / j) / (sum_j n'_j / j) + 1,
// clamped to [1, n']. The constant k cancels in the ratio.
double rank_rw(const SampleSet& s, double n_est, Degree d_u);

// PD method (random networks): Poisson tail sum
//   n' * e^-lambda * sum_{j=d_u+1}^{d'_max} lambda^j / j! + 1
// evaluated with the term recurrence term_{j+1} = term_j * lambda / (j+1),
// clamped to [1, n'].
double rank_pd(double n_est, double d_avg_est, Degree d_max_est, Degree d_u);

// Dispatch used by the evaluation protocol and the CLI. PL and PD ignore
// the sample; US/MH/RW require one.
double estimate_rank(Method method, const NetworkParams& params, const SampleSet& s, Degree d_u);

// One estimate with its inputs, as written to batch CSV output.
struct RankEstimate {
    Degree node_degree = 0;
    Method method = Method::us;
    double est_rank = 0.0;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
};

}  // namespace degrank
