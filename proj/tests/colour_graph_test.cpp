#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "ld/colour_graph.hpp"
#include "ld/generators.hpp"

using ld::code;
using ld::colour_edge;
using ld::colour_graph;
using ld::graph;

namespace {

std::vector<std::tuple<int, int, int>> as_tuples(const colour_graph& cg) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& e : cg.edges)
        out.emplace_back(e.x, e.y, e.colour);
    return out;
}

colour_graph with_extra(colour_graph cg, colour_edge e) {
    cg.edges.push_back(e);
    std::sort(cg.edges.begin(), cg.edges.end(), [](const colour_edge& a, const colour_edge& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    return cg;
}

}  // namespace

TEST_SUITE("colour-graph") {

TEST_CASE("K_2 with one codeword yields a monochrome triangle") {
    auto g = ld::path_graph(2);
    auto cg = ld::build_colour_graph(g, code::of({1}));
    CHECK(as_tuples(cg) ==
          std::vector<std::tuple<int, int, int>>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    CHECK(ld::verify_structure(cg, g, code::of({1})).all_passed());
}

TEST_CASE("P_10 colour graph, frozen") {
    auto g = ld::path_graph(10);
    auto s = code::of({2, 4, 7, 9});
    auto cg = ld::build_colour_graph(g, s);
    CHECK(cg.base_order == 10);
    CHECK(cg.base_code == s);
    CHECK(as_tuples(cg) == std::vector<std::tuple<int, int, int>>{
                               {0, 1, 2}, {0, 2, 2},  {0, 4, 4},  {0, 5, 4},
                               {0, 6, 7}, {0, 7, 7},  {0, 9, 9},  {0, 10, 9},
                               {1, 2, 2}, {1, 3, 4},  {3, 5, 2},  {4, 5, 4},
                               {6, 7, 7}, {6, 8, 9},  {8, 10, 7}, {9, 10, 9}});

    CHECK(cg.contains_edge(1, 0));  // lookup is order-blind
    CHECK(cg.edge_colour(3, 5) == 2);
    CHECK_FALSE(cg.contains_edge(1, 5));
    CHECK(cg.non_codeword_edges().size() == 8);

    auto counts = ld::colour_edge_counts(cg, s);
    REQUIRE(counts.size() == 4);
    for (int u : {2, 4, 7, 9}) {
        CHECK(counts[u].total == 4);
        CHECK(counts[u].outside_code == 2);
    }
}

TEST_CASE("structure checks pass on genuine colour graphs") {
    struct {
        graph g;
        code s;
    } cases[] = {
        {ld::path_graph(7), code::of({2, 4, 6})},
        {ld::path_graph(7), code::of({1, 4, 6})},
        {ld::cycle_graph(7), code::of({1, 3, 5})},
        {ld::broom_graph(9, 2), code::of({2, 4, 7, 9, 10})},
        {ld::star_graph(3), code::of({2, 3, 4})},
    };
    for (auto& [g, s] : cases) {
        REQUIRE(ld::is_ld_code(g, s));
        auto report = ld::verify_structure(ld::build_colour_graph(g, s), g, s);
        CHECK(report.all_passed());
    }
}

TEST_CASE("tampered colour graphs are caught by name") {
    auto g = ld::path_graph(10);
    auto s = code::of({2, 4, 7, 9});
    auto cg = ld::build_colour_graph(g, s);

    auto failing = [&](const colour_graph& bad, const char* name) {
        auto report = ld::verify_structure(bad, g, s);
        CHECK_FALSE(report.all_passed());
        const auto* check = report.find(name);
        REQUIRE(check != nullptr);
        CHECK_FALSE(check->passed);
    };

    failing(with_extra(cg, {1, 5, 2}), "colours-distinct-at-non-codewords");
    failing(with_extra(cg, {2, 3, 2}), "codeword-degree-at-most-two");
    failing(with_extra(cg, {2, 4, 2}), "no-edge-between-codewords");
    failing(with_extra(cg, {0, 3, 2}), "bipartite-even-colour-cycles");

    auto recoloured = cg;
    for (auto& e : recoloured.edges)
        if (e.x == 1 && e.y == 2)
            e.colour = 4;
    failing(recoloured, "codeword-edges-carry-own-colour");

    // {3,5} recoloured 4: both endpoints neighbour 4, not exactly one
    auto moved = cg;
    for (auto& e : moved.edges)
        if (e.x == 3 && e.y == 5)
            e.colour = 4;
    failing(moved, "one-endpoint-next-to-colour");
}

TEST_CASE("swap witnesses") {
    auto p4 = ld::path_graph(4);
    CHECK(ld::swap_witness(p4, code::of({1, 3}), 3) == 4);
    CHECK(ld::swap_witness(p4, code::of({1, 3}), 1) == 2);

    auto c4 = ld::cycle_graph(4);
    CHECK(ld::swap_witness(c4, code::of({1, 2}), 1) == 3);

    auto p10 = ld::path_graph(10);
    CHECK_FALSE(ld::swap_witness(p10, code::of({2, 4, 7, 9}), 2).has_value());

    CHECK_THROWS_AS(ld::swap_witness(p4, code::of({1, 3}), 2), std::invalid_argument);
    CHECK_THROWS_AS(ld::swap_witness(p4, code::of({1, 2, 3}), 1), std::invalid_argument);
    auto split = graph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(ld::swap_witness(split, code::of({1, 3}), 1), std::invalid_argument);
}

TEST_CASE("two-edge subgraph of P_10 meets the bound with equality") {
    auto g = ld::path_graph(10);
    auto s = code::of({2, 4, 7, 9});
    auto cg = ld::build_colour_graph(g, s);
    auto r = ld::two_edge_subgraph(cg, s, s);
    CHECK(r.g.order() == 7);
    CHECK(r.g.edge_count() == 8);
    CHECK(r.component_count == 1);
    CHECK(r.bipartite);
    CHECK(r.components_cacti);
    CHECK(r.bound_applicable);
    CHECK(r.bound_holds);
    CHECK(r.bound_equality);
    CHECK(r.all_ok());
    CHECK(r.chosen.size() == 8);
    CHECK(r.labels == std::vector<int>{0, 0, 1, 3, 5, 6, 8, 10});

    // every colour here has exactly two off-code edges, so the random picker
    // has no freedom
    auto rnd = ld::two_edge_subgraph_random(cg, s, s, 99);
    CHECK(rnd.g.edges() == r.g.edges());
    CHECK(ld::two_edge_subgraph_random(cg, s, s, 100).g.edges() == r.g.edges());
}

TEST_CASE("two-edge subgraph demands two edges per chosen colour") {
    auto c4 = ld::cycle_graph(4);
    auto s = code::of({1, 2});
    auto cg = ld::build_colour_graph(c4, s);
    CHECK(ld::colour_edge_counts(cg, s)[1].outside_code == 1);
    CHECK_THROWS_AS(ld::two_edge_subgraph(cg, s, code::of({1})), std::invalid_argument);
    CHECK_THROWS_AS(ld::two_edge_subgraph(cg, s, code::of({3})), std::invalid_argument);
}

TEST_CASE("forced-count bounds") {
    auto p10 = ld::check_forced_bounds(ld::path_graph(10));
    CHECK(p10.gamma == 4);
    CHECK(p10.forced_count == 4);
    CHECK(p10.applicable);
    CHECK(p10.two_thirds_equality);
    CHECK(p10.ratio_equality);
    CHECK(p10.two_thirds_slack == 0);
    CHECK(p10.ratio_slack == 0);
    CHECK(p10.all_ok());

    auto broom = ld::check_forced_bounds(ld::broom_graph(9, 2));
    CHECK(broom.gamma == 5);
    CHECK(broom.forced_count == 4);
    CHECK(broom.two_thirds_equality);
    CHECK_FALSE(broom.ratio_equality);
    CHECK(broom.ratio_slack == 2);
    CHECK(broom.all_ok());

    auto p6 = ld::check_forced_bounds(ld::path_graph(6));
    CHECK(p6.forced_count == 0);
    CHECK_FALSE(p6.applicable);
    CHECK(p6.all_ok());

    CHECK_THROWS_AS(ld::check_forced_bounds(graph::from_edges(1, {})),
                    std::invalid_argument);
    CHECK_THROWS_AS(ld::check_forced_bounds(graph::from_edges(4, {{1, 2}, {3, 4}})),
                    std::invalid_argument);
}

}  // TEST_SUITE
