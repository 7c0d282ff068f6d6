#include <doctest.h>

#include <sstream>

#include "ld/graph.hpp"

using ld::graph;

TEST_SUITE("graph") {

TEST_CASE("from_edges normalizes and validates") {
    auto g = graph::from_edges(4, {{3, 2}, {1, 2}, {4, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(g.adjacent(2, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.neighbours(2) == std::vector<int>{1, 3});
    CHECK(g.degree(3) == 2);

    CHECK_THROWS_AS(graph::from_edges(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::from_edges(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::from_edges(3, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::from_edges(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("masks use bit v-1") {
    auto g = graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    REQUIRE(g.has_masks());
    CHECK(g.closed_mask(1) == 0b0011);
    CHECK(g.closed_mask(2) == 0b0111);
    CHECK(g.open_mask(2) == 0b0101);
    CHECK(g.full_mask() == 0b1111);
    CHECK(ld::closed_neighbourhood(g, 2) == std::vector<int>{1, 2, 3});

    auto big = graph::from_edges(65, {{1, 65}});
    CHECK_FALSE(big.has_masks());
    CHECK_THROWS_AS(big.closed_mask(1), std::invalid_argument);
}

TEST_CASE("twins") {
    auto c4 = graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(ld::twins(c4, 1, 3) == ld::twin_kind::open_twins);
    CHECK(ld::twins(c4, 1, 2) == ld::twin_kind::none);

    auto k3 = graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(ld::twins(k3, 2, 3) == ld::twin_kind::closed_twins);

    auto p4 = graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(ld::twins(p4, 1, 4) == ld::twin_kind::none);
    CHECK_THROWS_AS(ld::twins(p4, 2, 2), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
    auto g = graph::from_edges(6, {{1, 2}, {2, 3}, {5, 6}});
    auto comps = ld::connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4});
    CHECK(comps[2] == std::vector<int>{5, 6});
    CHECK_FALSE(ld::is_connected(g));
    CHECK(ld::is_connected(graph::from_edges(1, {})));
}

TEST_CASE("bipartite") {
    CHECK(ld::is_bipartite(graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    CHECK_FALSE(ld::is_bipartite(graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK_FALSE(
        ld::is_bipartite(graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})));
    CHECK(ld::is_bipartite(graph::from_edges(2, {})));
}

TEST_CASE("cactus") {
    // two triangles sharing one vertex: each block is a cycle
    auto bowtie =
        graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(ld::is_cactus(bowtie));
    // two triangles sharing an edge: one block with 4 vertices, 5 edges
    auto diamond = graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(ld::is_cactus(diamond));
    CHECK(ld::is_cactus(graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK(ld::is_cactus(graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    CHECK_FALSE(ld::is_cactus(
        graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));
}

TEST_CASE("induced subgraphs and deletion") {
    auto p5 = graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto sub = ld::induced_subgraph(p5, {1, 2, 4, 5});
    CHECK(sub.g.order() == 4);
    CHECK(sub.g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(sub.new_to_old == std::vector<int>{0, 1, 2, 4, 5});
    CHECK(sub.old_to_new == std::vector<int>{0, 1, 2, 0, 3, 4});

    auto del = ld::delete_vertices(p5, {3});
    CHECK(del.g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(del.new_to_old == std::vector<int>{0, 1, 2, 4, 5});

    CHECK_THROWS_AS(ld::induced_subgraph(p5, {}), std::invalid_argument);
    CHECK(ld::induced_subgraph(p5, {2, 2, 1}).g.order() == 2);  // duplicates collapse
}

TEST_CASE("graph text round trip") {
    auto g = graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    std::ostringstream out;
    ld::write_graph(out, g);
    CHECK(out.str() == "5 4\n1 2\n2 3\n3 4\n4 5\n");

    std::istringstream in(out.str());
    auto back = ld::read_graph(in);
    CHECK(back.order() == 5);
    CHECK(back.edges() == g.edges());
}

TEST_CASE("graph reader accepts comments, rejects junk") {
    std::istringstream ok("# a path\n3 2\n1 2\n# middle\n2 3\n");
    auto g = ld::read_graph(ok);
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);

    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(ld::read_graph(in), ld::parse_error);
    };
    reject("");
    reject("3\n");
    reject("0 0\n");
    reject("3 1\n2 1\n");      // needs u < v
    reject("3 1\n1 1\n");
    reject("3 2\n1 2\n");      // fewer edges than promised
    reject("3 1\n1 2\n2 3\n"); // trailing tokens
    reject("3 1\n1 4\n");
    reject("x 1\n1 2\n");
    reject("3 one\n1 2\n");
}

}  // TEST_SUITE
