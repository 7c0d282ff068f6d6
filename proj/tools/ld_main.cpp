#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ld/acceptance.hpp"
#include "ld/colour_graph.hpp"
#include "ld/forced.hpp"
#include "ld/generators.hpp"
#include "ld/path_counting.hpp"
#include "ld/solver.hpp"

namespace {

// All commands speak the same protocol: `key=value` result lines on stdout,
// context lines prefixed with `# ` that --machine suppresses.
struct emitter {
    bool machine = false;
    void info(const std::string& text) const {
        if (!machine)
            std::cout << "# " << text << '\n';
    }
    void line(const std::string& text) const { std::cout << text << '\n'; }
};

std::string yesno(bool b) {
    return b ? "yes" : "no";
}

ld::graph load_graph(const std::string& path) {
    if (path == "-")
        return ld::read_graph(std::cin);
    return ld::read_graph_file(path);
}

ld::cnf_instance load_cnf(const std::string& path) {
    if (path == "-")
        return ld::read_dimacs_cnf(std::cin);
    return ld::read_dimacs_cnf_file(path);
}

// Accepts "2,4,7,9" or "2 4 7 9".
ld::code parse_code(std::string text) {
    for (char& c : text)
        if (c == ',')
            c = ' ';
    std::istringstream in(text);
    std::vector<int> vertices;
    int v = 0;
    while (in >> v)
        vertices.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("code must be a list of vertex numbers");
    if (vertices.empty())
        throw std::invalid_argument("code must not be empty");
    return ld::code::from_vertices(vertices);
}

void emit_graph(const ld::graph& g, const std::string& out_path,
                const std::vector<std::string>& comments) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw std::runtime_error("cannot write '" + out_path + "'");
        out = &file;
    }
    for (const auto& c : comments)
        *out << "# " << c << '\n';
    ld::write_graph(*out, g);
}

int cmd_gamma(const std::string& path, const emitter& out) {
    auto g = load_graph(path);
    out.info("graph with " + std::to_string(g.order()) + " vertices, " +
             std::to_string(g.edge_count()) + " edges");
    out.line("gamma=" + std::to_string(ld::gamma_ld(g)));
    return 0;
}

int cmd_enumerate(const std::string& path, std::size_t limit, const emitter& out) {
    auto g = load_graph(path);
    auto census = ld::enumerate_minimum_ld_codes(g);
    out.info(std::to_string(census.count()) + " minimum codes of size " +
             std::to_string(census.gamma));
    out.line("gamma=" + std::to_string(census.gamma));
    out.line("count=" + std::to_string(census.count()));
    std::size_t shown = 0;
    for (const auto& s : census.codes) {
        if (limit && shown == limit) {
            out.info("further codes suppressed by --limit");
            break;
        }
        out.line("code=" + s.to_string());
        ++shown;
    }
    return 0;
}

int cmd_forced(const std::string& path, bool use_characterization, const emitter& out) {
    auto g = load_graph(path);
    if (use_characterization) {
        auto forced = ld::classify_by_characterization(g);
        out.info("deletion characterization, vertex by vertex");
        out.line("gamma=" + std::to_string(ld::gamma_ld(g)));
        out.line("forced=" + forced.to_string());
        out.line("count=" + std::to_string(forced.size()));
        return 0;
    }
    auto census = ld::enumerate_minimum_ld_codes(g);
    auto cls = ld::classify_oracle(g, census);
    out.info("census of " + std::to_string(census.count()) + " minimum codes");
    out.line("gamma=" + std::to_string(census.gamma));
    out.line("forced=" + cls.forced.to_string());
    out.line("void=" + cls.min_void.to_string());
    out.line("free=" + cls.free_vertices.to_string());
    out.line("count=" + std::to_string(cls.forced.size()));
    return 0;
}

int cmd_void(const std::string& path, const emitter& out) {
    auto g = load_graph(path);
    auto census = ld::enumerate_minimum_ld_codes(g);
    auto cls = ld::classify_oracle(g, census);
    out.info("census of " + std::to_string(census.count()) + " minimum codes");
    out.line("gamma=" + std::to_string(census.gamma));
    out.line("void=" + cls.min_void.to_string());
    out.line("count=" + std::to_string(cls.min_void.size()));
    return 0;
}

int cmd_colour_graph(const std::string& path, const std::string& code_text, bool two_edge,
                     std::optional<std::uint64_t> seed, const emitter& out) {
    auto g = load_graph(path);
    auto s = parse_code(code_text);
    ld::check_code(g, s);
    if (!ld::is_ld_code(g, s))
        throw std::invalid_argument("'" + s.to_string() + "' is not a locating-dominating code");

    auto cg = ld::build_colour_graph(g, s);
    out.info("colour graph on labels 0.." + std::to_string(g.order()) +
             " (0 is the auxiliary vertex)");
    out.line("order=" + std::to_string(g.order() + 1));
    out.line("code=" + s.to_string());
    out.line("edges=" + std::to_string(cg.edges.size()));
    for (const auto& e : cg.edges)
        out.line(std::to_string(e.x) + " " + std::to_string(e.y) +
                 " colour=" + std::to_string(e.colour));

    auto counts = ld::colour_edge_counts(cg, s);
    for (const auto& [u, c] : counts)
        out.line("colour=" + std::to_string(u) + " total=" + std::to_string(c.total) +
                 " outside=" + std::to_string(c.outside_code));

    auto report = ld::verify_structure(cg, g, s);
    for (const auto& check : report.checks)
        out.info("check " + check.name + ": " + (check.passed ? "ok" : "FAIL " + check.detail));
    out.line(std::string("checks=") + (report.all_passed() ? "ok" : "fail"));

    if (two_edge) {
        ld::code eligible;
        for (const auto& [u, c] : counts)
            if (c.outside_code >= 2)
                eligible = eligible.with(u);
        out.line("two_edge_colours=" + eligible.to_string());
        if (!eligible.empty()) {
            auto r = seed ? ld::two_edge_subgraph_random(cg, s, eligible, *seed)
                          : ld::two_edge_subgraph(cg, s, eligible);
            out.line("two_edge_vertices=" + std::to_string(r.g.order()));
            out.line("two_edge_edges=" + std::to_string(r.g.edge_count()));
            out.line("two_edge_components=" + std::to_string(r.component_count));
            out.line("two_edge_bipartite=" + yesno(r.bipartite));
            out.line("two_edge_cacti=" + yesno(r.components_cacti));
            out.line(std::string("two_edge_bound=") +
                     (!r.bound_applicable ? "n/a"
                      : !r.bound_holds    ? "violated"
                      : r.bound_equality  ? "equality"
                                          : "strict"));
        }
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_count_paths(int n, std::optional<int> ld_star_k, const emitter& out) {
    if (ld_star_k) {
        out.info("LD*-codes of P_" + std::to_string(n) + " with " + std::to_string(*ld_star_k) +
                 " codewords");
        out.line("n=" + std::to_string(n));
        out.line("k=" + std::to_string(*ld_star_k));
        out.line("count=" + std::to_string(ld::a_value(n, *ld_star_k)));
        return 0;
    }
    out.info("minimum locating-dominating codes of P_" + std::to_string(n));
    out.line("n=" + std::to_string(n));
    out.line("gamma=" + std::to_string((2 * n + 4) / 5));
    out.line("count=" + std::to_string(ld::c_of_n(n)));
    return 0;
}

int cmd_verify_reduction(const std::string& path, const emitter& out) {
    auto f = load_cnf(path);
    auto r = ld::verify_reduction(f);
    auto rg = ld::sat_reduction(f);
    out.info("reduction graph: order " + std::to_string(rg.g.order()) + ", hub " +
             std::to_string(rg.hub()) + ", pendant " + std::to_string(rg.pendant()));
    out.line("variables=" + std::to_string(f.variable_count));
    out.line("clauses=" + std::to_string(f.clauses.size()));
    out.line("order=" + std::to_string(rg.g.order()));
    out.line("satisfiable=" + yesno(r.satisfiable));
    out.line("gamma=" + std::to_string(r.gamma));
    out.line("expected_gamma=" + std::to_string(r.expected_gamma));
    out.line("census=" + std::to_string(r.census_count));
    out.line("hub_forced=" + yesno(r.hub_forced));
    out.line("pendant_void=" + yesno(r.pendant_void));
    out.line("facts=" + std::string(r.gamma_ok && r.no_alpha_in_codes &&
                                            r.one_literal_per_variable && r.hub_or_pendant
                                        ? "ok"
                                        : "fail"));
    out.line("verified=" + yesno(r.all_ok()));
    return r.all_ok() ? 0 : 1;
}

int cmd_check_bounds(const std::string& path, const emitter& out) {
    auto g = load_graph(path);
    auto r = ld::check_forced_bounds(g);
    out.line("order=" + std::to_string(r.order));
    out.line("gamma=" + std::to_string(r.gamma));
    out.line("forced_count=" + std::to_string(r.forced_count));
    out.line("applicable=" + yesno(r.applicable));
    out.line(std::string("two_thirds=") + (!r.two_thirds_holds  ? "violated"
                                           : r.two_thirds_equality ? "equality"
                                                                   : "ok"));
    out.line("two_thirds_slack=" + std::to_string(r.two_thirds_slack));
    out.line(std::string("ratio=") +
             (!r.ratio_holds ? "violated" : r.ratio_equality ? "equality" : "ok"));
    out.line("ratio_slack=" + std::to_string(r.ratio_slack));
    out.line(std::string("order_bound=") +
             (!r.applicable ? "n/a" : r.order_bound_holds ? "ok" : "violated"));
    out.line("verified=" + yesno(r.all_ok()));
    return r.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum locating-dominating codes: solve, classify, count"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "print only key=value result lines");

    int rc = 0;
    auto sub = [&app](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    std::uint64_t env_seed;
    try {
        env_seed = ld::acceptance::seed_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    // gamma
    std::string gamma_file;
    auto* c_gamma = sub("gamma", "gamma^LD of a graph");
    c_gamma->add_option("file", gamma_file, "graph file, or - for stdin")->required();

    // enumerate
    std::string enum_file;
    std::size_t enum_limit = 0;
    auto* c_enum = sub("enumerate", "every minimum LD-code");
    c_enum->add_option("file", enum_file, "graph file, or - for stdin")->required();
    c_enum->add_option("--limit", enum_limit, "print at most this many codes (0 = all)");

    // forced / void
    std::string forced_file;
    bool forced_char = false;
    auto* c_forced = sub("forced", "vertices in every minimum code");
    c_forced->add_option("file", forced_file, "graph file, or - for stdin")->required();
    c_forced->add_flag("--characterization", forced_char,
                       "use the vertex-deletion test instead of the census");

    std::string void_file;
    auto* c_void = sub("void", "vertices in no minimum code");
    c_void->add_option("file", void_file, "graph file, or - for stdin")->required();

    // colour-graph
    std::string cg_file, cg_code;
    bool cg_two_edge = false;
    std::uint64_t cg_seed = 0;
    auto* c_cg = sub("colour-graph", "colour graph of an LD-code, with structure checks");
    c_cg->add_option("file", cg_file, "graph file, or - for stdin")->required();
    c_cg->add_option("--code", cg_code, "codewords, e.g. 2,4,7,9")->required();
    c_cg->add_flag("--two-edge", cg_two_edge, "also report the two-edges-per-colour subgraph");
    auto* cg_seed_opt = c_cg->add_option("--seed", cg_seed, "pick the two edges at random");

    // count-paths
    int cp_n = 0;
    int cp_k = 0;
    auto* c_cp = sub("count-paths", "count minimum LD-codes of the path P_n");
    c_cp->add_option("n", cp_n, "path order")->required();
    auto* cp_k_opt = c_cp->add_option("--ld-star", cp_k, "count LD*-codes of this size instead");

    // gen
    auto* c_gen = sub("gen", "write a generated graph");
    c_gen->require_subcommand(1);
    std::string gen_out;
    c_gen->add_option("-o,--output", gen_out, "write to this file instead of stdout");
    int gen_n = 0, gen_s = 0, gen_t = 0, gen_h = 0, gen_leaves = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = env_seed;
    std::string gen_cnf;
    auto* g_path = c_gen->add_subcommand("path", "path P_n");
    g_path->add_option("n", gen_n, "order")->required();
    auto* g_cycle = c_gen->add_subcommand("cycle", "cycle C_n");
    g_cycle->add_option("n", gen_n, "order")->required();
    auto* g_star = c_gen->add_subcommand("star", "star K_{1,leaves}");
    g_star->add_option("leaves", gen_leaves, "number of leaves")->required();
    auto* g_broom = c_gen->add_subcommand("broom", "path 1..s with t pendants at s");
    g_broom->add_option("s", gen_s, "handle length")->required();
    g_broom->add_option("t", gen_t, "pendant count")->required();
    auto* g_voidext = c_gen->add_subcommand("voidext", "2^h - 1 min-void vertices over h");
    g_voidext->add_option("size", gen_h, "independent-set size h")->required();
    auto* g_random = c_gen->add_subcommand("random", "connected G(n, p)");
    g_random->add_option("n", gen_n, "order")->required();
    g_random->add_option("p", gen_p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    g_random->add_option("--seed", gen_seed, "generator seed");
    auto* g_reduction = c_gen->add_subcommand("reduction", "satisfiability reduction graph");
    g_reduction->add_option("cnf", gen_cnf, "DIMACS CNF file, or - for stdin")->required();

    // verify-reduction
    std::string vr_cnf;
    auto* c_vr = sub("verify-reduction", "check the reduction graph of a CNF instance");
    c_vr->add_option("cnf", vr_cnf, "DIMACS CNF file, or - for stdin")->required();

    // check-bounds
    std::string cb_file;
    auto* c_cb = sub("check-bounds", "bounds on the number of forced vertices");
    c_cb->add_option("file", cb_file, "graph file, or - for stdin")->required();

    // reproduce-all
    std::string ra_only;
    std::uint64_t ra_seed = env_seed;
    auto* c_ra = sub("reproduce-all", "run the whole acceptance battery");
    c_ra->add_option("--only", ra_only, "run only criteria whose name contains this");
    c_ra->add_option("--seed", ra_seed, "seed for the randomized criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    emitter out{machine};
    try {
        if (*c_gamma)
            rc = cmd_gamma(gamma_file, out);
        else if (*c_enum)
            rc = cmd_enumerate(enum_file, enum_limit, out);
        else if (*c_forced)
            rc = cmd_forced(forced_file, forced_char, out);
        else if (*c_void)
            rc = cmd_void(void_file, out);
        else if (*c_cg)
            rc = cmd_colour_graph(cg_file, cg_code, cg_two_edge,
                                  cg_seed_opt->count() ? std::optional(cg_seed) : std::nullopt,
                                  out);
        else if (*c_cp)
            rc = cmd_count_paths(cp_n, cp_k_opt->count() ? std::optional(cp_k) : std::nullopt,
                                 out);
        else if (*c_gen) {
            if (*g_path)
                emit_graph(ld::path_graph(gen_n), gen_out, {});
            else if (*g_cycle)
                emit_graph(ld::cycle_graph(gen_n), gen_out, {});
            else if (*g_star)
                emit_graph(ld::star_graph(gen_leaves), gen_out, {});
            else if (*g_broom)
                emit_graph(ld::broom_graph(gen_s, gen_t), gen_out, {});
            else if (*g_voidext)
                emit_graph(ld::min_void_extremal(gen_h), gen_out, {});
            else if (*g_random)
                emit_graph(ld::random_connected(gen_n, gen_p, gen_seed), gen_out, {});
            else if (*g_reduction) {
                auto rg = ld::sat_reduction(load_cnf(gen_cnf));
                emit_graph(rg.g, gen_out,
                           {"reduction: variables=" + std::to_string(rg.variable_count) +
                            " clauses=" + std::to_string(rg.clause_count) +
                            " hub=" + std::to_string(rg.hub()) +
                            " pendant=" + std::to_string(rg.pendant())});
            }
        } else if (*c_vr)
            rc = cmd_verify_reduction(vr_cnf, out);
        else if (*c_cb)
            rc = cmd_check_bounds(cb_file, out);
        else if (*c_ra)
            rc = ld::acceptance::run_and_report(std::cout, ra_only, ra_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
