#include <doctest.h>

#include <cmath>

#include "degrank/generate.hpp"
#include "degrank/rank.hpp"
#include "test_helpers.hpp"

using namespace degrank;
using namespace degrank::test;

namespace {

// Independent long-double oracle for the Poisson tail: direct evaluation of
// lambda^j / j! per term. Valid for lambda <= 50, j <= 200 without overflow.
double poisson_tail_direct(double n, double lambda, Degree d_max, Degree d_u) {
    long double sum = 0.0L;
    for (Degree j = d_u + 1; j <= d_max; ++j)
        sum += powl(static_cast<long double>(lambda), j) / tgammal(static_cast<long double>(j) + 1.0L);
    const long double value = static_cast<long double>(n) * expl(-static_cast<long double>(lambda)) * sum + 1.0L;
    return static_cast<double>(value);
}

NetworkParams make_params(double n, double gamma, Degree d_min, Degree d_max, double d_avg) {
    NetworkParams p;
    p.est_size = n;
    p.est_min_degree = d_min;
    p.est_max_degree = d_max;
    p.est_avg_degree = d_avg;
    p.gamma = gamma;
    p.norm_const = norm_const(gamma, d_min, d_max);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("rank");

TEST_CASE("pl hand evaluation") {
    // n=1000, gamma=2.5, d_min=1, d_max=100, d_u=9
    const double est = expected_rank_pl(1000, 2.5, 1, 100, 9);
    CHECK(std::abs(est - 31.653430031715509) / 31.653430031715509 < 1e-9);
}

TEST_CASE("pl boundary behavior") {
    CHECK(expected_rank_pl(1000, 2.5, 1, 100, 99) == 1.0);    // d_u + 1 = d_max
    CHECK(expected_rank_pl(1000, 2.5, 1, 100, 150) == 1.0);   // beyond the top
    CHECK(expected_rank_pl(1000, 2.5, 5, 100, 2) == 1000.0);  // below d_min clamps to n
    // full integral mass before clamping: n + 1 at d_u = d_min - 1
    const double raw = 1000 * pl_mass_above(2.5, 1.0, 100.0, 0) + 1.0;
    CHECK(raw == doctest::Approx(1001.0).epsilon(1e-12));
    CHECK_THROWS_AS(expected_rank_pl(1000, 1.0, 1, 100, 5), std::invalid_argument);
}

TEST_CASE("rank_pl uses the estimated parameters") {
    const NetworkParams p = make_params(1000, 2.5, 1, 100, 3.0);
    CHECK(rank_pl(p, 9) == doctest::Approx(31.653430031715509).epsilon(1e-9));
    NetworkParams no_gamma = p;
    no_gamma.gamma.reset();
    CHECK_THROWS_AS(rank_pl(no_gamma, 9), std::invalid_argument);
}

TEST_CASE("local_rank counts strictly larger sample degrees") {
    const Graph g = star_graph(5);
    // degrees in trace: {1, 1, 5, 1}
    const SampleSet s = sample_from_trace(g, SampleMethod::uniform, {1, 2, 0, 3});
    CHECK(local_rank(s, 5) == 1);
    CHECK(local_rank(s, 7) == 1);
    CHECK(local_rank(s, 1) == 2);
    CHECK(local_rank(s, 0) == 5);
}

TEST_CASE("local_rank on a fabricated degree multiset") {
    // degrees {1, 1, 2, 5}: two entries above degree 1
    std::vector<std::pair<NodeId, NodeId>> edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {5, 6}};
    const Graph g = Graph::from_edges(7, std::move(edges));
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.degree(3) == 1);
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(2) == 5);
    const SampleSet s = sample_from_trace(g, SampleMethod::uniform, {0, 3, 1, 2});
    CHECK(local_rank(s, 1) == 3);
}

TEST_CASE("rank_us formula and clamping") {
    CHECK(rank_us(1000, 10, 2) == 200.0);
    CHECK(rank_us(1000, 10, 1) == 100.0);  // coarsest expressible rank at 1%
    CHECK(rank_us(1000, 10, 500) == 1000.0);  // clamped to n'
    CHECK_THROWS_AS(rank_us(1000, 0, 1), std::invalid_argument);
}

TEST_CASE("us with the full sample and true n reproduces exact ranks") {
    const Graph g = generate_ba(150, 3, 21);
    const RankTable ranks = exact_degree_ranks(g);
    const SampleSet all = sample_all(g);
    for (Degree d : g.distinct_degrees()) {
        const double est = rank_us(g.node_count(), all.size(), local_rank(all, d));
        CHECK(est == static_cast<double>(ranks.rank_of_degree(d)));
    }
}

TEST_CASE("rank_mh requires mhrw samples and tracks the us formula") {
    const Graph g = cycle_graph(30);
    const SampleSet mh = sample_mhrw(g, 100, 5);
    // every node has degree 2, so the local rank is 1 everywhere
    CHECK(rank_mh(mh, 900.0, 2) == doctest::Approx(9.0));
    CHECK(rank_mh(mh, 900.0, 5) == doctest::Approx(9.0));
    const SampleSet rw = sample_rw(g, 100, 5);
    CHECK_THROWS_AS(rank_mh(rw, 900.0, 2), std::invalid_argument);
}

TEST_CASE("full-length mhrw tracks us accuracy over many seeds") {
    const Graph g = generate_ba(200, 3, 2);
    const RankTable ranks = exact_degree_ranks(g);
    const auto degrees = g.distinct_degrees();
    const std::size_t s = 10 * g.node_count();
    double mh_err = 0.0;
    double us_err = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SampleSet mh = sample_mhrw(g, s, 100 + seed);
        const SampleSet uni = sample_uniform(g, s, 200 + seed);
        for (Degree d : degrees) {
            const double act = ranks.rank_of_degree(d);
            mh_err += std::abs(rank_mh(mh, g.node_count(), d) - act);
            us_err += std::abs(rank_us(g.node_count(), uni.size(), local_rank(uni, d)) - act);
        }
    }
    // long walks make MHRW samples near-uniform; accuracy lands in the same
    // band as genuine uniform sampling
    CHECK(mh_err <= 2.5 * us_err + 20.0 * degrees.size());
}

TEST_CASE("rw rank of the leaves of a star") {
    // K_{1,9}: only the hub outranks degree 1, so with n_est = 10 the
    // bias-corrected estimate lands near 2
    const Graph g = star_graph(9);
    const SampleSet walk = sample_rw(g, 20000, 4, NodeId{0});
    const double est = rank_rw(walk, 10.0, 1);
    CHECK(est == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("rw resampling law hand evaluation") {
    // degree counts {1: 2, 2: 1} -> q(1) = 0.8, q(2) = 0.2, k = 1.25
    const Graph g = path_graph(3);
    const SampleSet s = sample_from_trace(g, SampleMethod::rw, {0, 2, 1});
    const ResampleWeights w = rw_resample_weights(s);
    CHECK(w.q.at(1) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(w.q.at(2) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(w.k == doctest::Approx(1.25).epsilon(1e-12));

    // est = 100 * (0.5 / 2.5) + 1 = 21
    const double est = rank_rw(s, 100.0, 1);
    CHECK(std::abs(est - 21.0) / 21.0 < 1e-9);
}

TEST_CASE("rank_rw boundary and method guard") {
    const Graph g = path_graph(3);
    const SampleSet s = sample_from_trace(g, SampleMethod::rw, {0, 2, 1});
    CHECK(rank_rw(s, 100.0, 2) == 1.0);  // empty numerator, +1
    CHECK(rank_rw(s, 100.0, 9) == 1.0);
    const SampleSet u = sample_from_trace(g, SampleMethod::uniform, {0, 2, 1});
    CHECK_THROWS_AS(rank_rw(u, 100.0, 1), std::invalid_argument);
}

TEST_CASE("rank_rw equals rank_us on a regular graph trace") {
    const Graph g = cycle_graph(50);
    // full-length trace: the n'_j / j weights cancel and both formulas
    // coincide for every degree
    const SampleSet full = sample_rw(g, 50, 8);
    for (Degree d : {0u, 1u, 2u, 3u}) {
        const double via_rw = rank_rw(full, 50.0, d);
        const double via_us = rank_us(50.0, full.size(), local_rank(full, d));
        CHECK(via_rw == doctest::Approx(via_us).epsilon(1e-12));
    }
    // short trace: identical below the shared degree; at and above it the
    // retained +1 floors RW at 1 while US floors at n'/s
    const SampleSet s = sample_rw(g, 400, 8);
    for (Degree d : {0u, 1u}) {
        CHECK(rank_rw(s, 1000.0, d) ==
              doctest::Approx(rank_us(1000.0, s.size(), local_rank(s, d))).epsilon(1e-12));
    }
    CHECK(rank_rw(s, 1000.0, 2) == 1.0);
}

TEST_CASE("pd hand evaluation") {
    // n=1000, d_avg=2, d_max=6, d_u=4
    const double est = rank_pd(1000, 2.0, 6, 4);
    CHECK(std::abs(est - 49.119211817462290) / 49.119211817462290 < 1e-9);
}

TEST_CASE("pd tail matches direct long-double summation") {
    for (double lambda : {0.5, 2.0, 11.5, 27.0, 50.0}) {
        for (Degree d_max : {20u, 120u, 200u}) {
            for (Degree d_u : {0u, 3u, 17u, 80u}) {
                const double fast = rank_pd(1e6, lambda, d_max, d_u);
                const double direct = std::min(poisson_tail_direct(1e6, lambda, d_max, d_u), 1e6);
                CHECK(std::abs(fast - direct) / direct < 1e-10);
            }
        }
    }
}

TEST_CASE("pd boundary behavior") {
    CHECK(rank_pd(1000, 2.0, 6, 6) == 1.0);
    CHECK(rank_pd(1000, 2.0, 6, 9) == 1.0);
    CHECK_THROWS_AS(rank_pd(1000, 0.0, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(rank_pd(1000, 2.0, 0, 1), std::invalid_argument);
    // d_u = 0 leaves nearly the whole mass above
    const double est = rank_pd(1000, 4.0, 40, 0);
    const double direct = poisson_tail_direct(1000, 4.0, 40, 0);
    CHECK(est == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("every estimator is non-increasing in degree") {
    const Graph g = generate_ba(400, 3, 14);
    const NetworkParams est_p = make_params(420.0, 2.7, 3, g.max_degree(), 6.0);
    const SampleSet uni = sample_uniform(g, 120, 3);
    const SampleSet mh = sample_mhrw(g, 120, 4);
    const SampleSet rw = sample_rw(g, 120, 5);
    for (Method m : {Method::pl, Method::us, Method::mh, Method::rw, Method::pd}) {
        double prev = std::numeric_limits<double>::infinity();
        for (Degree d = 0; d <= g.max_degree() + 2; ++d) {
            const SampleSet& s = m == Method::us ? uni : (m == Method::mh ? mh : rw);
            const double est = estimate_rank(m, est_p, s, d);
            CHECK(est <= prev + 1e-12);
            CHECK(est >= 1.0);
            CHECK(est <= est_p.est_size);
            prev = est;
        }
    }
}

TEST_CASE("method names round-trip") {
    for (Method m : {Method::pl, Method::us, Method::mh, Method::rw, Method::pd})
        CHECK(method_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(method_from_string("bogus"), std::invalid_argument);
}

TEST_SUITE_END();
