#include <doctest.h>

#include <cmath>

#include "degrank/generate.hpp"
#include "test_helpers.hpp"

using namespace degrank;
using namespace degrank::test;

TEST_SUITE_BEGIN("generate");

TEST_CASE("ba edge count is k(n-k)") {
    const Graph g = generate_ba(1000, 7, 42);
    CHECK(g.edge_count() == 7u * (1000 - 7));
    CHECK(g.min_degree() >= 1);
}

TEST_CASE("ba n=11 k=10: the single later node adopts the whole core") {
    const Graph g = generate_ba(11, 10, 1);
    CHECK(g.edge_count() == 10);
    CHECK(g.degree(10) == 10);
    for (NodeId v = 0; v < 10; ++v) CHECK(g.has_edge(10, v));
}

TEST_CASE("ba rejects n <= k") {
    CHECK_THROWS_AS(generate_ba(5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_ba(10, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_ba(10, 0, 1), std::invalid_argument);
}

TEST_CASE("ba is deterministic and attaches to distinct targets") {
    const Graph a = generate_ba(300, 4, 9);
    const Graph b = generate_ba(300, 4, 9);
    REQUIRE(a.edge_count() == b.edge_count());
    for (NodeId u = 0; u < a.node_count(); ++u) CHECK(a.degree(u) == b.degree(u));
    // distinctness: every non-core node has >= k neighbors
    for (NodeId u = 4; u < a.node_count(); ++u) CHECK(a.degree(u) >= 4);
}

TEST_CASE("ba degree distribution has a power-law tail") {
    const Graph g = generate_ba(100000, 10, 7);
    const auto hist = g.degree_histogram();
    // log-log regression over the well-populated range
    std::vector<double> xs;
    std::vector<double> ys;
    for (Degree d = 20; d <= 150 && d < hist.size(); ++d) {
        if (hist[d] >= 5) {
            xs.push_back(std::log(static_cast<double>(d)));
            ys.push_back(std::log(static_cast<double>(hist[d])));
        }
    }
    REQUIRE(xs.size() >= 50);
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = num / den;
    CHECK(slope > -3.5);
    CHECK(slope < -2.5);
}

TEST_CASE("er target at n-1 yields the complete graph") {
    const Graph g = generate_er(4, 3.0, 5);
    CHECK(g.edge_count() == 6);
    for (NodeId u = 0; u < 4; ++u) CHECK(g.degree(u) == 3);
}

TEST_CASE("er rejects out-of-range targets") {
    CHECK_THROWS_AS(generate_er(100, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_er(100, 99.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_er(1, 0.5, 1), std::invalid_argument);
}

TEST_CASE("er realized average degree tracks the target") {
    const Graph g = generate_er(100000, 11.5, 11);
    CHECK(g.avg_degree() == doctest::Approx(11.5).epsilon(0.01));
}

TEST_CASE("er degree histogram fits Poisson at the 1% level") {
    const Graph g = generate_er(10000, 5.0, 2);
    const auto hist = g.degree_histogram();
    const double n = g.node_count();
    const double lambda = 5.0;

    // Poisson pmf via the multiplicative recurrence; tail bins with expected
    // count < 5 are pooled.
    std::vector<double> expected;
    double term = std::exp(-lambda);
    double used_mass = 0.0;
    std::vector<double> observed;
    double pooled_obs = 0.0;
    for (Degree d = 0;; ++d) {
        if (d > 0) term *= lambda / d;
        const double exp_count = n * term;
        const std::uint64_t obs = d < hist.size() ? hist[d] : 0;
        if (exp_count < 5.0 && d > lambda) {
            pooled_obs += static_cast<double>(obs);
            if (term * n < 1e-6 && d >= hist.size()) break;
            continue;
        }
        expected.push_back(exp_count);
        observed.push_back(static_cast<double>(obs));
        used_mass += term;
    }
    expected.push_back(n * (1.0 - used_mass));  // pooled tail
    observed.push_back(pooled_obs);

    double chi2 = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const double diff = observed[i] - expected[i];
        chi2 += diff * diff / expected[i];
    }
    const double dof = static_cast<double>(expected.size()) - 1.0;
    const double critical = chi_square_quantile(dof, 2.3263478740408408);  // 99th percentile
    CHECK(chi2 < critical);
}

TEST_CASE("er keeps isolated nodes") {
    const Graph g = generate_er(2000, 0.5, 3);
    CHECK(g.min_degree() == 0);
    CHECK(g.node_count() == 2000);
}

TEST_SUITE_END();
