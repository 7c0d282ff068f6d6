#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ld/graph.hpp"

namespace ld {

graph path_graph(int n);         // vertices 1..n in path order
graph cycle_graph(int n);        // n >= 3
graph star_graph(int leaves);    // centre 1, leaves 2..leaves+1

// Path 1..s with t extra pendant vertices s+1..s+t attached to vertex s.
graph broom_graph(int s, int t);

// h independent vertices 1..h plus one vertex per nonempty subset of them,
// labelled h+1 onward in increasing binary order and adjacent to exactly
// that subset. Its unique minimum LD-code is {1..h}, leaving 2^h - 1
// min-void vertices. Guarded to 2 <= h <= 6.
graph min_void_extremal(int h);

// 3-SAT instance, DIMACS-signed literals; every clause has exactly three
// (possibly repeated) literals.
struct cnf_instance {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

cnf_instance read_dimacs_cnf(std::istream& in);
cnf_instance read_dimacs_cnf_file(const std::string& path);
bool brute_force_satisfiable(const cnf_instance& f);

enum class reduction_role {
    positive_literal,  // x_i
    negative_literal,  // negated x_i
    twin_a,            // upper 4-cycle vertex of the variable gadget
    twin_b,            // lower 4-cycle vertex
    clause_alpha,      // clause vertex wired to its literals and the hub
    clause_beta,
    clause_gamma,
    hub,               // adjacent to every clause_alpha and to the pendant
    pendant,
};

// Graph of the satisfiability reduction: per variable a 4-cycle
// x_i - a_i - !x_i - b_i - x_i, per clause a path alpha_j - beta_j - gamma_j
// with alpha_j joined to its three literal vertices and to the hub w, plus
// a pendant v on w. gamma^LD = 2 * variables + clauses + 1; the hub is
// min-forced and the pendant min-void exactly when the formula is
// unsatisfiable.
struct reduction_graph {
    graph g;
    int variable_count = 0;
    int clause_count = 0;
    std::vector<reduction_role> roles;  // index 1..n (index 0 unused)

    int positive_literal(int i) const { return 4 * (i - 1) + 1; }
    int negative_literal(int i) const { return 4 * (i - 1) + 2; }
    int twin_a(int i) const { return 4 * (i - 1) + 3; }
    int twin_b(int i) const { return 4 * (i - 1) + 4; }
    int clause_alpha(int j) const { return 4 * variable_count + 3 * (j - 1) + 1; }
    int clause_beta(int j) const { return 4 * variable_count + 3 * (j - 1) + 2; }
    int clause_gamma(int j) const { return 4 * variable_count + 3 * (j - 1) + 3; }
    int hub() const { return 4 * variable_count + 3 * clause_count + 1; }
    int pendant() const { return 4 * variable_count + 3 * clause_count + 2; }
};

reduction_graph sat_reduction(const cnf_instance& f);

struct reduction_report {
    bool satisfiable = false;
    int gamma = 0;
    int expected_gamma = 0;
    std::size_t census_count = 0;
    bool gamma_ok = false;
    bool no_alpha_in_codes = false;       // no minimum code touches a clause_alpha
    bool one_literal_per_variable = false;  // exactly one of x_i, !x_i per code
    bool hub_or_pendant = false;          // exactly one of hub, pendant per code
    bool hub_forced = false;
    bool pendant_void = false;
    bool equivalence_ok = false;  // hub_forced == pendant_void == !satisfiable
    bool all_ok() const;
};

// Full check of the reduction on one instance; needs 4n + 3m + 2 <= 24 so the
// census stays exhaustive.
reduction_report verify_reduction(const cnf_instance& f);

// Connected G(n, p)-style graph: a random spanning tree first, then every
// remaining pair independently with probability edge_prob. Same seed, same
// graph.
graph random_connected(int n, double edge_prob, std::uint64_t seed);

// Every connected graph on n vertices, one per isomorphism class, n <= 8.
std::vector<graph> connected_graph_catalogue(int n);

}  // namespace ld
