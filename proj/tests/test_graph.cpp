#include <doctest.h>

#include <sstream>

#include "degrank/generate.hpp"
#include "degrank/graph.hpp"
#include "degrank/rng.hpp"
#include "test_helpers.hpp"

using namespace degrank;
using namespace degrank::test;

TEST_SUITE_BEGIN("graph");

TEST_CASE("load_edge_list parses a small path") {
    std::istringstream in("0 1\n1 2\n");
    const Graph g = load_edge_list(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("load_edge_list drops duplicates and self-loops") {
    std::istringstream in("0 1\n1 0\n0 0\n");
    const Graph g = load_edge_list(in);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("load_edge_list skips comments and remaps sparse ids") {
    std::istringstream in("# header\n% more\n10 20\n20 30\n\n10 30\n");
    const Graph g = load_edge_list(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    REQUIRE(g.original_ids().size() == 3);
    CHECK(g.original_ids()[0] == 10);
    CHECK(g.original_ids()[1] == 20);
    CHECK(g.original_ids()[2] == 30);
}

TEST_CASE("load_edge_list reports malformed lines with their number") {
    std::istringstream in("0 1\n1 x\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
    std::istringstream in2("0 1\n\n2\n");
    try {
        load_edge_list(in2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("load_edge_list rejects empty input") {
    std::istringstream in("# only comments\n");
    CHECK_THROWS(load_edge_list(in));
}

TEST_CASE("graph invariants hold after ingestion") {
    std::istringstream in("0 1\n1 2\n2 3\n3 0\n0 2\n");
    const Graph g = load_edge_list(in);
    std::uint64_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        degree_sum += g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            CHECK(v != u);
            CHECK(g.has_edge(v, u));  // symmetric
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(g.min_degree() <= g.avg_degree());
    CHECK(g.avg_degree() <= g.max_degree());
}

TEST_CASE("edge-list round trip is idempotent") {
    const Graph g = generate_ba(200, 3, 17);
    std::ostringstream first;
    save_edge_list(g, first);
    std::istringstream back(first.str());
    const Graph g2 = load_edge_list(back);
    std::ostringstream second;
    save_edge_list(g2, second);
    CHECK(first.str() == second.str());
    CHECK(g2.node_count() == g.node_count());
    CHECK(g2.edge_count() == g.edge_count());
}

TEST_CASE("binary cache round trip") {
    const Graph g = generate_er(500, 4.0, 3);
    const std::string path = "graph_cache_test.bin";
    save_binary_file(g, path);
    const Graph g2 = load_binary_file(path);
    REQUIRE(g2.node_count() == g.node_count());
    REQUIRE(g2.edge_count() == g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u) CHECK(g2.degree(u) == g.degree(u));
    const Graph g3 = load_graph_file(path);  // sniffs the magic
    CHECK(g3.edge_count() == g.edge_count());
    std::remove(path.c_str());
}

TEST_CASE("exact ranks: triangle shares rank 1") {
    const Graph g = cycle_graph(3);
    const RankTable ranks = exact_degree_ranks(g);
    for (NodeId u = 0; u < 3; ++u) CHECK(ranks.rank_of(u) == 1);
}

TEST_CASE("exact ranks: path center first") {
    const Graph g = path_graph(3);
    const RankTable ranks = exact_degree_ranks(g);
    CHECK(ranks.rank_of(1) == 1);
    CHECK(ranks.rank_of(0) == 2);
    CHECK(ranks.rank_of(2) == 2);
    CHECK(ranks.rank_of_degree(2) == 1);
    CHECK(ranks.rank_of_degree(1) == 2);
    CHECK(ranks.rank_of_degree(5) == 1);  // above the maximum
}

TEST_CASE("exact ranks agree with the pairwise definition") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = seed % 2 == 0 ? generate_er(50, 3.5, seed) : generate_ba(50, 2, seed);
        const RankTable ranks = exact_degree_ranks(g);
        const auto brute = brute_force_ranks(g);
        for (NodeId u = 0; u < g.node_count(); ++u) CHECK(ranks.rank_of(u) == brute[u]);
    }
}

TEST_CASE("largest component and induced subgraph keep degrees") {
    // two triangles plus an isolated bridge pair; LCC is ambiguous in size
    // so extend one side
    std::vector<std::pair<NodeId, NodeId>> edges = {
        {0, 1}, {1, 2}, {2, 0}, {2, 3},   // 4-node component
        {4, 5}, {5, 6}, {6, 4},           // triangle
        {7, 8},
    };
    const Graph g = Graph::from_edges(9, std::move(edges));
    const auto lcc = largest_component(g);
    REQUIRE(lcc.size() == 4);
    const Graph sub = induced_subgraph(g, lcc);
    CHECK(sub.node_count() == 4);
    CHECK(sub.edge_count() == 4);
    for (NodeId u = 0; u < sub.node_count(); ++u) {
        const NodeId outer = static_cast<NodeId>(sub.original_ids()[u]);
        CHECK(sub.degree(u) == g.degree(outer));
    }
}

TEST_SUITE_END();
