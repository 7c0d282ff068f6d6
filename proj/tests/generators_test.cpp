#include <doctest.h>

#include <set>
#include <sstream>

#include "ld/generators.hpp"
#include "ld/solver.hpp"

using ld::graph;

TEST_SUITE("generators") {

TEST_CASE("basic families") {
    auto p1 = ld::path_graph(1);
    CHECK(p1.order() == 1);
    CHECK(p1.edge_count() == 0);
    CHECK(ld::path_graph(5).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(ld::cycle_graph(3).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(ld::star_graph(4).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}});

    CHECK_THROWS_AS(ld::path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(ld::cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(ld::star_graph(0), std::invalid_argument);
}

TEST_CASE("brooms") {
    auto b = ld::broom_graph(9, 2);
    CHECK(b.order() == 11);
    CHECK(b.edge_count() == 10);
    CHECK(b.neighbours(9) == std::vector<int>{8, 10, 11});
    CHECK(b.degree(10) == 1);
    CHECK(b.degree(11) == 1);

    // t = 0 gives the bare path, s = 1 the star
    CHECK(ld::broom_graph(9, 0).edges() == ld::path_graph(9).edges());
    CHECK(ld::broom_graph(1, 3).edges() == ld::star_graph(3).edges());
    CHECK_THROWS_AS(ld::broom_graph(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ld::broom_graph(3, -1), std::invalid_argument);
}

TEST_CASE("min-void extremal graphs") {
    auto g2 = ld::min_void_extremal(2);
    CHECK(g2.order() == 5);
    CHECK(g2.edges() ==
          std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 4}, {2, 5}});
    auto g3 = ld::min_void_extremal(3);
    CHECK(g3.order() == 10);
    CHECK(g3.edge_count() == 12);

    CHECK_THROWS_AS(ld::min_void_extremal(1), std::invalid_argument);
    CHECK_THROWS_AS(ld::min_void_extremal(7), std::invalid_argument);
}

TEST_CASE("DIMACS reader") {
    std::istringstream in("c tiny\np cnf 2 2\n1 -2 2 0\nc mid\n-1 -1 -1 0\n");
    auto f = ld::read_dimacs_cnf(in);
    CHECK(f.variable_count == 2);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 2});
    CHECK(f.clauses[1] == std::array<int, 3>{-1, -1, -1});

    auto reject = [](const std::string& text) {
        std::istringstream bad(text);
        CHECK_THROWS_AS(ld::read_dimacs_cnf(bad), ld::parse_error);
    };
    reject("");
    reject("p cnf 2 1\n1 2 0\n");        // two literals only
    reject("p cnf 2 1\n1 2 2 1 0\n");    // four literals
    reject("p cnf 2 1\n1 2 3 0\n");      // out of range
    reject("p cnf 2 2\n1 2 2 0\n");      // fewer clauses than promised
    reject("p cnf 2 1\n1 2 2 0\njunk");  // trailing text
    reject("p dnf 2 1\n1 2 2 0\n");
    reject("2 1\n1 2 2 0\n");
}

TEST_CASE("brute-force satisfiability") {
    CHECK(ld::brute_force_satisfiable({1, {{1, 1, 1}}}));
    CHECK_FALSE(ld::brute_force_satisfiable({1, {{1, 1, 1}, {-1, -1, -1}}}));
    CHECK(ld::brute_force_satisfiable({2, {{1, 2, 2}, {-1, -2, -2}}}));
    CHECK_FALSE(ld::brute_force_satisfiable(
        {2, {{1, 1, 2}, {1, 1, -2}, {-1, -1, 2}, {-1, -1, -2}}}));
    CHECK_THROWS_AS(ld::brute_force_satisfiable({31, {{1, 2, 3}}}), std::invalid_argument);
}

TEST_CASE("reduction graph wiring") {
    auto r = ld::sat_reduction({2, {{1, 2, -1}}});
    CHECK(r.variable_count == 2);
    CHECK(r.clause_count == 1);
    CHECK(r.g.order() == 13);
    CHECK(r.g.edge_count() == 15);
    CHECK(r.hub() == 12);
    CHECK(r.pendant() == 13);
    CHECK(r.clause_alpha(1) == 9);

    // variable 4-cycles
    for (int i = 1; i <= 2; ++i) {
        CHECK(r.g.adjacent(r.positive_literal(i), r.twin_a(i)));
        CHECK(r.g.adjacent(r.negative_literal(i), r.twin_a(i)));
        CHECK(r.g.adjacent(r.positive_literal(i), r.twin_b(i)));
        CHECK(r.g.adjacent(r.negative_literal(i), r.twin_b(i)));
        CHECK_FALSE(r.g.adjacent(r.positive_literal(i), r.negative_literal(i)));
    }
    // clause path, literal wiring, hub, pendant
    CHECK(r.g.adjacent(r.clause_alpha(1), r.clause_beta(1)));
    CHECK(r.g.adjacent(r.clause_beta(1), r.clause_gamma(1)));
    CHECK(r.g.adjacent(r.clause_alpha(1), r.positive_literal(1)));
    CHECK(r.g.adjacent(r.clause_alpha(1), r.positive_literal(2)));
    CHECK(r.g.adjacent(r.clause_alpha(1), r.negative_literal(1)));
    CHECK(r.g.adjacent(r.clause_alpha(1), r.hub()));
    CHECK(r.g.adjacent(r.hub(), r.pendant()));
    CHECK(r.g.degree(r.pendant()) == 1);

    // repeated literals collapse to one edge
    auto collapsed = ld::sat_reduction({2, {{1, 2, 2}}});
    CHECK(collapsed.g.edge_count() == 14);
    CHECK(collapsed.roles[collapsed.hub()] == ld::reduction_role::hub);
    CHECK(collapsed.roles[3] == ld::reduction_role::twin_a);
}

TEST_CASE("reduction verification on tiny instances") {
    auto sat = ld::verify_reduction({1, {{1, 1, 1}}});
    CHECK(sat.satisfiable);
    CHECK(sat.gamma == 4);
    CHECK(sat.all_ok());
    CHECK_FALSE(sat.hub_forced);
    CHECK_FALSE(sat.pendant_void);

    auto unsat = ld::verify_reduction({1, {{1, 1, 1}, {-1, -1, -1}}});
    CHECK_FALSE(unsat.satisfiable);
    CHECK(unsat.gamma == 5);
    CHECK(unsat.all_ok());
    CHECK(unsat.hub_forced);
    CHECK(unsat.pendant_void);

    CHECK_THROWS_AS(ld::verify_reduction({3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}),
                    std::invalid_argument);
}

TEST_CASE("random connected graphs are deterministic per seed") {
    auto a = ld::random_connected(12, 0.3, 7);
    auto b = ld::random_connected(12, 0.3, 7);
    CHECK(a.edges() == b.edges());
    CHECK(a.order() == 12);
    CHECK(ld::is_connected(a));

    auto tree = ld::random_connected(9, 0.0, 1);
    CHECK(tree.edge_count() == 8);
    CHECK(ld::is_connected(tree));
    auto complete = ld::random_connected(6, 1.0, 1);
    CHECK(complete.edge_count() == 15);
    CHECK(ld::random_connected(1, 0.5, 3).order() == 1);

    CHECK_THROWS_AS(ld::random_connected(0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(ld::random_connected(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("catalogue of connected graphs") {
    const std::size_t counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto cat = ld::connected_graph_catalogue(n);
        CHECK(cat.size() == counts[n]);
        for (const auto& g : cat) {
            CHECK(g.order() == n);
            CHECK(ld::is_connected(g));
        }
    }
    // distinct edge sets at n = 5
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto& g : ld::connected_graph_catalogue(5))
        seen.insert(g.edges());
    CHECK(seen.size() == 21);

    CHECK_THROWS_AS(ld::connected_graph_catalogue(0), std::invalid_argument);
    CHECK_THROWS_AS(ld::connected_graph_catalogue(9), std::invalid_argument);
}

}  // TEST_SUITE
