#include <doctest.h>

#include "ld/forced.hpp"
#include "ld/generators.hpp"

using ld::code;
using ld::graph;

TEST_SUITE("forced") {

TEST_CASE("path classifications") {
    auto classify = [](int n) { return ld::classify_oracle(ld::path_graph(n)); };

    CHECK(classify(5).forced == code::of({2, 4}));
    CHECK(classify(5).min_void == code::of({1, 3, 5}));
    CHECK(classify(6).forced == code());
    CHECK(classify(6).min_void == code());
    CHECK(classify(6).free_vertices == code::of({1, 2, 3, 4, 5, 6}));
    CHECK(classify(7).forced == code::of({4}));
    CHECK(classify(7).min_void == code::of({3, 5}));
    CHECK(classify(9).min_void == code::of({5}));
    CHECK(classify(10).forced == code::of({2, 4, 7, 9}));
    CHECK(classify(10).min_void == code::of({1, 3, 5, 6, 8, 10}));
    CHECK(classify(12).forced == code::of({4, 9}));
    CHECK(classify(12).min_void == code::of({3, 5, 8, 10}));
}

TEST_CASE("classification partitions the vertex set") {
    for (int n : {4, 7, 9, 11}) {
        auto g = ld::path_graph(n);
        auto cls = ld::classify_oracle(g);
        CHECK((cls.forced.mask() | cls.min_void.mask() | cls.free_vertices.mask()) ==
              g.full_mask());
        CHECK((cls.forced.mask() & cls.min_void.mask()) == 0);
        CHECK((cls.forced.mask() & cls.free_vertices.mask()) == 0);
        CHECK((cls.min_void.mask() & cls.free_vertices.mask()) == 0);
    }
}

TEST_CASE("bull graph: unique code, everything else void") {
    auto bull = graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}});
    auto cls = ld::classify_oracle(bull);
    CHECK(cls.forced == code::of({1, 2}));
    CHECK(cls.min_void == code::of({3, 4, 5}));
    CHECK(cls.free_vertices == code());
}

TEST_CASE("isolated vertices are forced") {
    auto g = graph::from_edges(3, {{1, 2}});
    auto cls = ld::classify_oracle(g);
    CHECK(cls.forced == code::of({3}));
    CHECK(cls.min_void == code());
    CHECK(ld::is_min_forced_characterization(g, 3));

    auto k1 = graph::from_edges(1, {});
    CHECK(ld::classify_oracle(k1).forced == code::of({1}));
    CHECK(ld::is_min_forced_characterization(k1, 1));
}

TEST_CASE("deletion characterization agrees with the census oracle") {
    std::vector<graph> corpus;
    for (int n = 2; n <= 12; ++n)
        corpus.push_back(ld::path_graph(n));
    for (int n = 3; n <= 9; ++n)
        corpus.push_back(ld::cycle_graph(n));
    corpus.push_back(ld::star_graph(4));
    corpus.push_back(ld::broom_graph(9, 2));
    corpus.push_back(ld::min_void_extremal(2));
    corpus.push_back(graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}}));
    corpus.push_back(graph::from_edges(6, {{1, 2}, {2, 3}, {5, 6}}));  // disconnected
    for (const auto& g : corpus)
        CHECK(ld::classify_by_characterization(g) == ld::classify_oracle(g).forced);
}

TEST_CASE("characterization detail on P_10 and P_6") {
    auto p10 = ld::path_graph(10);
    CHECK(ld::is_min_forced_characterization(p10, 2));
    CHECK(ld::is_min_forced_characterization(p10, 9));
    CHECK_FALSE(ld::is_min_forced_characterization(p10, 1));
    CHECK_FALSE(ld::is_min_forced_characterization(p10, 5));
    auto p6 = ld::path_graph(6);
    for (int v = 1; v <= 6; ++v)
        CHECK_FALSE(ld::is_min_forced_characterization(p6, v));
}

TEST_CASE("non-swappable codewords") {
    auto p10 = ld::path_graph(10);
    CHECK(ld::is_non_swappable(p10, code::of({2, 4, 7, 9}), 2));

    auto p4 = ld::path_graph(4);
    CHECK_FALSE(ld::is_non_swappable(p4, code::of({1, 3}), 3));  // 4 replaces 3

    CHECK_THROWS_AS(ld::is_non_swappable(p4, code::of({1, 3}), 2), std::invalid_argument);
    CHECK_THROWS_AS(ld::is_non_swappable(p4, code::of({1, 2}), 1), std::invalid_argument);
}

}  // TEST_SUITE
