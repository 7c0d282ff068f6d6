#include "ld/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "ld/colour_graph.hpp"
#include "ld/forced.hpp"
#include "ld/generators.hpp"
#include "ld/path_counting.hpp"
#include "ld/solver.hpp"

namespace ld::acceptance {

namespace {

struct outcome {
    bool ok = true;
    std::string detail;
};

outcome fail(std::string why) {
    return {false, std::move(why)};
}

outcome pass(std::string summary = "") {
    return {true, std::move(summary)};
}

int gamma_path_formula(int n) {
    return (2 * n + 4) / 5;
}

// the four broom shapes pinned by the acceptance gate: (m, t) with s = 5m + 4
constexpr std::pair<int, int> broom_cases[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}};

code broom_expected_forced(int m) {
    code c;
    for (int l = 0; l <= m; ++l)
        c = c.with(5 * l + 2).with(5 * l + 4);
    return c;
}

std::vector<graph> random_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double probs[] = {0.15, 0.25, 0.4, 0.6};
    std::vector<graph> out;
    out.reserve(200);
    for (int i = 0; i < 200; ++i) {
        int n = 9 + i % 4;
        double p = probs[(i / 4) % 4];
        out.push_back(random_connected(n, p, rng()));
    }
    return out;
}

constexpr std::size_t catalogue_sizes[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

// ---- criterion bodies -------------------------------------------------

outcome run_path_gamma(std::uint64_t) {
    for (int n = 1; n <= 15; ++n) {
        int got = gamma_ld(path_graph(n));
        if (got != gamma_path_formula(n))
            return fail("P_" + std::to_string(n) + ": gamma " + std::to_string(got) +
                        " != ceil(2n/5) = " + std::to_string(gamma_path_formula(n)));
    }
    return pass("n = 1..15");
}

outcome run_ld_star_gamma(std::uint64_t) {
    for (int n = 2; n <= 15; ++n) {
        int exact = gamma_ld_star_exact(n);
        if (exact != gamma_ld_star(n) || exact != (2 * (n - 1) + 4) / 5)
            return fail("P_" + std::to_string(n) + ": exhaustive LD* minimum " +
                        std::to_string(exact) + " != ceil(2(n-1)/5)");
    }
    return pass("n = 2..15");
}

outcome run_path_count_agreement(std::uint64_t) {
    for (int n = 5; n <= 22; ++n) {
        std::int64_t rec = c_of_n(n);
        std::int64_t closed = c_closed_form(n);
        std::int64_t brute = brute_count(n);
        if (rec != closed || rec != brute)
            return fail("C(" + std::to_string(n) + "): recurrence " + std::to_string(rec) +
                        ", closed " + std::to_string(closed) + ", brute " +
                        std::to_string(brute));
    }
    for (auto [n, want] : {std::pair{10, 1}, {7, 3}, {9, 8}})
        if (c_of_n(n) != want)
            return fail("C(" + std::to_string(n) + ") != " + std::to_string(want));
    return pass("n = 5..22, three ways");
}

outcome run_ld_star_table(std::uint64_t) {
    for (auto [n, k, want] :
         {std::tuple{1, 0, 1}, {2, 1, 2}, {3, 1, 2}, {4, 2, 5}, {5, 2, 4}})
        if (a_value(n, k) != want)
            return fail("A(" + std::to_string(n) + "," + std::to_string(k) + ") != " +
                        std::to_string(want));
    count_table table;
    for (int n = 1; n <= 18; ++n)
        for (int k = 0; k <= n; ++k) {
            std::int64_t rec = table.a_value(n, k);
            std::int64_t brute = brute_count_ld_star(n, k);
            if (rec != brute)
                return fail("A(" + std::to_string(n) + "," + std::to_string(k) +
                            "): recurrence " + std::to_string(rec) + " != brute " +
                            std::to_string(brute));
        }
    return pass("all k for n = 1..18");
}

outcome run_forced_characterization(std::uint64_t seed) {
    long graphs = 0;
    for (int n = 1; n <= 8; ++n) {
        auto cat = connected_graph_catalogue(n);
        if (cat.size() != catalogue_sizes[n])
            return fail("catalogue(" + std::to_string(n) + ") holds " +
                        std::to_string(cat.size()) + " graphs, expected " +
                        std::to_string(catalogue_sizes[n]));
        for (const auto& g : cat) {
            ++graphs;
            if (classify_by_characterization(g) != classify_oracle(g).forced)
                return fail("characterization disagrees with the census oracle on a graph "
                            "of order " + std::to_string(n));
        }
    }
    for (const auto& g : random_corpus(seed)) {
        ++graphs;
        if (classify_by_characterization(g) != classify_oracle(g).forced)
            return fail("characterization disagrees on a random graph of order " +
                        std::to_string(g.order()));
    }
    return pass(std::to_string(graphs) + " graphs (catalogue n <= 8 + 200 random)");
}

outcome run_colour_graph_structure(std::uint64_t) {
    long codes_checked = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const auto& g : connected_graph_catalogue(n)) {
            auto census = enumerate_minimum_ld_codes(g);
            auto forced = classify_oracle(g, census).forced;
            for (const auto& s : census.codes) {
                ++codes_checked;
                auto cg = build_colour_graph(g, s);
                auto report = verify_structure(cg, g, s);
                if (!report.all_passed()) {
                    for (const auto& check : report.checks)
                        if (!check.passed)
                            return fail("n=" + std::to_string(n) + " code {" + s.to_string() +
                                        "}: " + check.name + " (" + check.detail + ")");
                }
                auto counts = colour_edge_counts(cg, s);
                for (const auto& [u, count] : counts)
                    if (count.total < 1)
                        return fail("minimal code {" + s.to_string() + "}: colour " +
                                    std::to_string(u) + " has no edge");
                for (int v : forced.vertices())
                    if (counts[v].outside_code < 2)
                        return fail("forced vertex " + std::to_string(v) + " of {" +
                                    s.to_string() + "} has < 2 colour edges off the code");
            }
        }
    }
    return pass(std::to_string(codes_checked) + " minimum codes, n = 2..8");
}

outcome run_two_edge_subgraph(std::uint64_t) {
    auto check_graph = [](const graph& g) -> outcome {
        auto census = enumerate_minimum_ld_codes(g);
        for (const auto& s : census.codes) {
            auto cg = build_colour_graph(g, s);
            auto counts = colour_edge_counts(cg, s);
            code eligible;
            for (const auto& [u, count] : counts)
                if (count.outside_code >= 2)
                    eligible = eligible.with(u);
            if (eligible.empty())
                continue;
            auto r = two_edge_subgraph(cg, s, eligible);
            if (!r.all_ok())
                return fail("two-edge subgraph of {" + s.to_string() + "} violates " +
                            std::string(!r.bipartite ? "bipartiteness"
                                        : !r.components_cacti ? "cactus shape"
                                                              : "the size bound"));
        }
        return pass();
    };
    for (int n = 2; n <= 8; ++n)
        for (const auto& g : connected_graph_catalogue(n))
            if (auto r = check_graph(g); !r.ok)
                return r;
    for (auto [m, t] : broom_cases)
        if (auto r = check_graph(broom_graph(5 * m + 4, t)); !r.ok)
            return r;

    // the P_10 colour graph meets the bound with equality: 7 = (3/4) * 8 + 1
    auto p10 = path_graph(10);
    auto s = code::of({2, 4, 7, 9});
    auto r = two_edge_subgraph(build_colour_graph(p10, s), s, s);
    if (r.g.order() != 7 || r.g.edge_count() != 8 || r.component_count != 1 ||
        !r.bound_equality)
        return fail("P_10 subgraph: got " + std::to_string(r.g.order()) + " vertices, " +
                    std::to_string(r.g.edge_count()) + " edges, " +
                    std::to_string(r.component_count) + " components");
    return pass("catalogue n = 2..8 + brooms; P_10 attains equality");
}

outcome run_forced_bounds(std::uint64_t seed) {
    auto check_graph = [](const graph& g) -> outcome {
        auto r = check_forced_bounds(g);
        if (!r.all_ok())
            return fail("bounds fail on a graph of order " + std::to_string(g.order()) +
                        " with k = " + std::to_string(r.forced_count) + ", gamma = " +
                        std::to_string(r.gamma));
        return pass();
    };
    for (int n = 2; n <= 8; ++n)
        for (const auto& g : connected_graph_catalogue(n))
            if (auto r = check_graph(g); !r.ok)
                return r;
    for (const auto& g : random_corpus(seed))
        if (auto r = check_graph(g); !r.ok)
            return r;
    for (auto [m, t] : broom_cases) {
        auto r = check_forced_bounds(broom_graph(5 * m + 4, t));
        if (!r.all_ok() || !r.two_thirds_equality)
            return fail("broom s=" + std::to_string(5 * m + 4) + " t=" + std::to_string(t) +
                        " misses two-thirds equality (slack " +
                        std::to_string(r.two_thirds_slack) + ")");
    }
    auto p10 = check_forced_bounds(path_graph(10));
    if (!p10.ratio_equality)
        return fail("P_10 misses 2n/5 equality");
    return pass("catalogue + brooms + random; brooms and P_10 attain equality");
}

outcome run_broom_forced(std::uint64_t) {
    for (auto [m, t] : broom_cases) {
        auto g = broom_graph(5 * m + 4, t);
        auto census = enumerate_minimum_ld_codes(g);
        if (census.gamma != 2 * m + t + 1)
            return fail("broom m=" + std::to_string(m) + " t=" + std::to_string(t) +
                        ": gamma " + std::to_string(census.gamma) + " != " +
                        std::to_string(2 * m + t + 1));
        auto forced = classify_oracle(g, census).forced;
        if (forced != broom_expected_forced(m))
            return fail("broom m=" + std::to_string(m) + " t=" + std::to_string(t) +
                        ": forced {" + forced.to_string() + "} != {" +
                        broom_expected_forced(m).to_string() + "}");
    }
    return pass("(m,t) in {(1,1),(1,2),(1,3),(2,1)}");
}

outcome run_min_void_extremal(std::uint64_t) {
    for (int h : {2, 3}) {
        auto g = min_void_extremal(h);
        auto census = enumerate_minimum_ld_codes(g);
        if (census.gamma != h)
            return fail("G_" + std::to_string(h) + ": gamma " + std::to_string(census.gamma) +
                        " != " + std::to_string(h));
        auto cls = classify_oracle(g, census);
        if (cls.min_void.size() != (1 << h) - 1)
            return fail("G_" + std::to_string(h) + ": " + std::to_string(cls.min_void.size()) +
                        " min-void vertices != 2^h - 1");
    }
    return pass("h in {2, 3}");
}

outcome run_sat_reduction(std::uint64_t seed) {
    std::vector<std::array<int, 3>> clause_pool;
    const int lits2[] = {1, -1, 2, -2};
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            for (int c = b; c < 4; ++c)
                clause_pool.push_back({lits2[a], lits2[b], lits2[c]});

    long instances = 0;
    auto check = [&instances](const cnf_instance& f) -> outcome {
        ++instances;
        auto r = verify_reduction(f);
        if (!r.all_ok()) {
            std::string why = !r.gamma_ok             ? "gamma != 2n + m + 1"
                              : !r.no_alpha_in_codes  ? "a clause vertex entered a code"
                              : !r.one_literal_per_variable ? "literal pair not split"
                              : !r.hub_or_pendant     ? "hub/pendant not split"
                                                      : "forced/void vs SAT mismatch";
            return fail(why + " on an instance with " + std::to_string(f.clauses.size()) +
                        " clauses (satisfiable = " + (r.satisfiable ? "yes" : "no") + ")");
        }
        return pass();
    };

    // every 3-clause CNF over two variables with 1..3 clauses
    std::size_t p = clause_pool.size();
    for (std::size_t i = 0; i < p; ++i)
        if (auto r = check({2, {clause_pool[i]}}); !r.ok)
            return r;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j)
            if (auto r = check({2, {clause_pool[i], clause_pool[j]}}); !r.ok)
                return r;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j)
            for (std::size_t k = j; k < p; ++k)
                if (auto r = check({2, {clause_pool[i], clause_pool[j], clause_pool[k]}}); !r.ok)
                    return r;

    // sampled three-variable instances, still within the exhaustive-census size
    std::mt19937_64 rng(seed);
    const int lits3[] = {1, -1, 2, -2, 3, -3};
    for (int i = 0; i < 51; ++i) {
        cnf_instance f;
        f.variable_count = 3;
        int m = 1 + i % 3;
        for (int j = 0; j < m; ++j)
            f.clauses.push_back({lits3[rng() % 6], lits3[rng() % 6], lits3[rng() % 6]});
        if (auto r = check(f); !r.ok)
            return r;
    }
    return pass(std::to_string(instances) + " instances (1770 exhaustive + 51 sampled)");
}

outcome run_swap_witness(std::uint64_t) {
    long witnesses = 0, required = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const auto& g : connected_graph_catalogue(n)) {
            auto census = enumerate_minimum_ld_codes(g);
            for (const auto& s : census.codes) {
                auto counts = colour_edge_counts(build_colour_graph(g, s), s);
                for (int v : s.vertices()) {
                    auto witness = swap_witness(g, s, v);
                    if (witness) {
                        ++witnesses;
                        if (!is_ld_code(g, s.without(v).with(*witness)))
                            return fail("unsound witness " + std::to_string(*witness) +
                                        " for " + std::to_string(v) + " in {" + s.to_string() +
                                        "}");
                    }
                    if (counts[v].outside_code < 2) {
                        ++required;
                        if (!witness)
                            return fail("codeword " + std::to_string(v) + " of {" +
                                        s.to_string() + "} has < 2 colour edges but no swap");
                    }
                }
            }
        }
    }
    return pass(std::to_string(witnesses) + " witnesses checked, " + std::to_string(required) +
                " guaranteed by the colour count");
}

}  // namespace

std::uint64_t default_seed() {
    return 12345;
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("LD_SEED");
    if (!env || !*env)
        return default_seed();
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw std::invalid_argument("LD_SEED must be an unsigned integer");
    return value;
}

std::vector<criterion_result> run(std::ostream& out, const std::string& filter,
                                  std::uint64_t seed) {
    struct definition {
        int id;
        const char* name;
        outcome (*body)(std::uint64_t);
    };
    const definition defs[] = {
        {1, "path-gamma", run_path_gamma},
        {2, "ld-star-gamma", run_ld_star_gamma},
        {3, "path-count-agreement", run_path_count_agreement},
        {4, "ld-star-table", run_ld_star_table},
        {5, "forced-characterization", run_forced_characterization},
        {6, "colour-graph-structure", run_colour_graph_structure},
        {7, "two-edge-subgraph", run_two_edge_subgraph},
        {8, "forced-bounds", run_forced_bounds},
        {9, "broom-forced", run_broom_forced},
        {10, "min-void-extremal", run_min_void_extremal},
        {11, "sat-reduction", run_sat_reduction},
        {12, "swap-witness", run_swap_witness},
    };

    std::vector<criterion_result> results;
    for (const auto& def : defs) {
        if (!filter.empty() && std::string(def.name).find(filter) == std::string::npos &&
            filter != std::to_string(def.id))
            continue;
        auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = def.body(seed);
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        criterion_result r{def.id, def.name, o.ok, o.detail, secs};
        results.push_back(r);

        std::ostringstream line;
        line << '[' << std::setw(2) << r.id << "/12] " << std::left << std::setw(26) << r.name
             << (r.passed ? "PASS" : "FAIL") << std::right << std::setw(8) << std::fixed
             << std::setprecision(2) << r.seconds << "s";
        if (!r.detail.empty())
            line << "  " << r.detail;
        out << line.str() << '\n' << std::flush;
    }
    return results;
}

int run_and_report(std::ostream& out, const std::string& filter, std::uint64_t seed) {
    auto results = run(out, filter, seed);
    if (results.empty()) {
        out << "no criterion matches '" << filter << "'\n";
        return 1;
    }
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed ? 0 : 1;
    if (failed)
        out << failed << " of " << results.size() << " criteria failed\n";
    else
        out << "all " << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}

}  // namespace ld::acceptance
