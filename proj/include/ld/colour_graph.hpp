#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ld/code.hpp"
#include "ld/graph.hpp"

namespace ld {

// Edge of a colour graph. Labels run over 0..n where 0 is the auxiliary
// vertex; the colour is always a codeword label.
struct colour_edge {
    int x = 0;
    int y = 0;  // x < y
    int colour = 0;
};

// Colour graph of an LD-code S: vertices V(G) plus the auxiliary vertex 0,
// and an edge {x, y} of colour u in S whenever x, y lie outside S - u and
// dropping u from S merges their I-sets. The auxiliary vertex has an empty
// I-set under every code, so its edges flag codewords that become
// undominated/unseparated-from-nothing when u leaves.
struct colour_graph {
    static constexpr int aux_vertex = 0;

    int base_order = 0;  // n of the underlying graph
    code base_code;      // the code S the graph was built from
    std::vector<colour_edge> edges;  // sorted by (x, y)

    bool contains_edge(int x, int y) const;
    std::optional<int> edge_colour(int x, int y) const;

    // Edges of CG - S: both endpoints outside S (the auxiliary vertex counts
    // as a non-codeword).
    std::vector<colour_edge> non_codeword_edges() const;
};

// Requires is_ld_code(g, s).
colour_graph build_colour_graph(const graph& g, code s);

struct property_check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct structure_report {
    std::vector<property_check> checks;
    bool all_passed() const;
    const property_check* find(std::string_view name) const;
};

// Checks the structural invariants a colour graph of an LD-code must have:
//   (i)    no edge joins two codewords
//   (ii)   edges at a codeword u carry colour u
//   (iii)  same-coloured edges between non-codewords never share an endpoint
//   (iv)   a u-coloured edge between non-codewords has exactly one endpoint
//          adjacent to u in G
//   (v)    if two of ux, uy, xy are u-coloured (x, y non-codewords), so is
//          the third
//   (vi)   at most two edges meet any codeword
//   (vii)  CG - S is bipartite and every cycle carries each colour an even
//          number of times (checked on a fundamental cycle basis)
//   (viii) sampled edge-simple walks in CG - S with all-even colour counts
//          are closed (walks up to length 8)
structure_report verify_structure(const colour_graph& cg, const graph& g, code s);

struct colour_edge_count {
    int total = 0;
    int outside_code = 0;  // edges with both endpoints off S
};

// Per-colour edge counts, one entry for every codeword of s.
std::map<int, colour_edge_count> colour_edge_counts(const colour_graph& cg, code s);

// For a minimal code of a connected nontrivial graph: hunts for a vertex u
// with S - v + u again an LD-code. A codeword whose colour has fewer than
// two edges in CG - S always admits one.
std::optional<int> swap_witness(const graph& g, code s, int v);

struct two_edge_subgraph_result {
    graph g;                    // relabelled 1..|V(H)|
    std::vector<int> labels;    // new label -> colour-graph label (0 = aux)
    std::vector<colour_edge> chosen;  // in colour-graph labels
    int component_count = 0;
    bool bipartite = false;
    bool components_cacti = false;
    bool bound_applicable = false;  // |V(H)| >= 4
    bool bound_holds = true;        // |V| >= (3/4)|E| + components
    bool bound_equality = false;
    bool all_ok() const { return bipartite && components_cacti && bound_holds; }
};

// Edge-induced subgraph of CG - S picking exactly two edges per colour of
// `chosen_colours` (the lexicographically smallest two). Errors if some
// chosen colour has fewer than two edges there.
two_edge_subgraph_result two_edge_subgraph(const colour_graph& cg, code s, code chosen_colours);

// Same, but the two edges per colour are drawn from a seeded generator.
two_edge_subgraph_result two_edge_subgraph_random(const colour_graph& cg, code s,
                                                  code chosen_colours, std::uint64_t seed);

struct forced_bounds_report {
    int order = 0;
    int gamma = 0;
    int forced_count = 0;
    bool applicable = false;  // at least one min-forced vertex
    bool two_thirds_holds = true;   // 3k <= 2(n - gamma)
    bool ratio_holds = true;        // 5k <= 2n
    bool order_bound_holds = true;  // gamma <= n - 3
    bool two_thirds_equality = false;
    bool ratio_equality = false;
    int two_thirds_slack = 0;  // 2(n - gamma) - 3k
    int ratio_slack = 0;       // 2n - 5k
    bool all_ok() const;
};

// Bounds the number k of min-forced vertices of a connected graph, n >= 2:
// k <= (2/3)(n - gamma), k <= 2n/5, and gamma <= n - 3 when k >= 1.
forced_bounds_report check_forced_bounds(const graph& g);

}  // namespace ld
